"""Independent raw-DEFLATE (RFC 1951) decompressor.

A from-scratch bit-level inflater used only by the tests, so that every
stream the package emits is verified against a decoder that shares no code
with zlib.  Handles all three block types (stored, fixed Huffman, dynamic
Huffman).  Slow and strict on purpose.
"""


class _BitReader:
    def __init__(self, data):
        self.data = data
        self.pos = 0
        self.bit = 0

    def read_bit(self):
        if self.pos >= len(self.data):
            raise ValueError("truncated stream")
        b = (self.data[self.pos] >> self.bit) & 1
        self.bit += 1
        if self.bit == 8:
            self.bit = 0
            self.pos += 1
        return b

    def read_bits(self, n):
        # DEFLATE packs multi-bit fields least significant bit first.
        value = 0
        for i in range(n):
            value |= self.read_bit() << i
        return value

    def align_byte(self):
        if self.bit:
            self.bit = 0
            self.pos += 1


class _Huffman:
    """Canonical Huffman decoder built from a code-length list: codes of
    each length are assigned in symbol order, shorter lengths first."""

    def __init__(self, lengths):
        max_len = max(lengths, default=0)
        count = [0] * (max_len + 1)
        for ln in lengths:
            if ln:
                count[ln] += 1
        next_code = [0] * (max_len + 1)
        code = 0
        for bits in range(1, max_len + 1):
            code = (code + count[bits - 1]) << 1
            next_code[bits] = code
        self.table = {}
        for sym, ln in enumerate(lengths):
            if ln:
                self.table[(ln, next_code[ln])] = sym
                next_code[ln] += 1

    def read_symbol(self, reader):
        # Huffman codes arrive most significant bit first.
        code = 0
        length = 0
        while True:
            code = (code << 1) | reader.read_bit()
            length += 1
            sym = self.table.get((length, code))
            if sym is not None:
                return sym
            if length > 15:
                raise ValueError("invalid Huffman code")


_LEN_BASE = (3, 4, 5, 6, 7, 8, 9, 10, 11, 13, 15, 17, 19, 23, 27, 31, 35,
             43, 51, 59, 67, 83, 99, 115, 131, 163, 195, 227, 258)
_LEN_EXTRA = (0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 3,
              4, 4, 4, 4, 5, 5, 5, 5, 0)
_DIST_BASE = (1, 2, 3, 4, 5, 7, 9, 13, 17, 25, 33, 49, 65, 97, 129, 193,
              257, 385, 513, 769, 1025, 1537, 2049, 3073, 4097, 6145, 8193,
              12289, 16385, 24577)
_DIST_EXTRA = (0, 0, 0, 0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6, 7, 7, 8, 8,
               9, 9, 10, 10, 11, 11, 12, 12, 13, 13)

_CL_ORDER = (16, 17, 18, 0, 8, 7, 9, 6, 10, 5, 11, 4, 12, 3, 13, 2, 14, 1,
             15)

_FIXED_LIT = _Huffman([8] * 144 + [9] * 112 + [7] * 24 + [8] * 8)
_FIXED_DIST = _Huffman([5] * 30)


def _read_dynamic_tables(reader):
    hlit = reader.read_bits(5) + 257
    hdist = reader.read_bits(5) + 1
    hclen = reader.read_bits(4) + 4
    cl_lengths = [0] * 19
    for i in range(hclen):
        cl_lengths[_CL_ORDER[i]] = reader.read_bits(3)
    cl = _Huffman(cl_lengths)
    lengths = []
    while len(lengths) < hlit + hdist:
        sym = cl.read_symbol(reader)
        if sym < 16:
            lengths.append(sym)
        elif sym == 16:
            if not lengths:
                raise ValueError("repeat with no previous code length")
            lengths.extend([lengths[-1]] * (3 + reader.read_bits(2)))
        elif sym == 17:
            lengths.extend([0] * (3 + reader.read_bits(3)))
        else:
            lengths.extend([0] * (11 + reader.read_bits(7)))
    if len(lengths) != hlit + hdist:
        raise ValueError("code length run overflows the table")
    return _Huffman(lengths[:hlit]), _Huffman(lengths[hlit:])


def _inflate_compressed_block(reader, lit, dist, out):
    while True:
        sym = lit.read_symbol(reader)
        if sym == 256:
            return
        if sym < 256:
            out.append(sym)
            continue
        if sym > 285:
            raise ValueError(f"invalid literal/length symbol {sym}")
        idx = sym - 257
        length = _LEN_BASE[idx] + reader.read_bits(_LEN_EXTRA[idx])
        dsym = dist.read_symbol(reader)
        if dsym > 29:
            raise ValueError(f"invalid distance symbol {dsym}")
        distance = _DIST_BASE[dsym] + reader.read_bits(_DIST_EXTRA[dsym])
        if distance > len(out):
            raise ValueError("match distance reaches before stream start")
        for _ in range(length):
            out.append(out[-distance])


def inflate(data):
    """Decode a raw DEFLATE stream to its original bytes."""
    reader = _BitReader(data)
    out = bytearray()
    while True:
        final = reader.read_bit()
        btype = reader.read_bits(2)
        if btype == 0:
            reader.align_byte()
            if reader.pos + 4 > len(data):
                raise ValueError("truncated stored-block header")
            ln = data[reader.pos] | (data[reader.pos + 1] << 8)
            nln = data[reader.pos + 2] | (data[reader.pos + 3] << 8)
            if ln ^ nln != 0xFFFF:
                raise ValueError("stored-block length check failed")
            reader.pos += 4
            if reader.pos + ln > len(data):
                raise ValueError("truncated stored block")
            out.extend(data[reader.pos : reader.pos + ln])
            reader.pos += ln
        elif btype == 1:
            _inflate_compressed_block(reader, _FIXED_LIT, _FIXED_DIST, out)
        elif btype == 2:
            lit, dist = _read_dynamic_tables(reader)
            _inflate_compressed_block(reader, lit, dist, out)
        else:
            raise ValueError("reserved block type 3")
        if final:
            break
    return bytes(out)
