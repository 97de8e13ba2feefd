"""FAT name handling: 8.3 short names and long-name (LFN) chains.

Short names live in the 11-byte field of a directory entry, space-padded,
uppercase. Long names are stored in preceding 32-byte entries of attribute
0x0F, each carrying 13 UTF-16 code units and a checksum binding the chain to
its short entry.
"""

from .errors import NameInvalidError

LFN_ATTR = 0x0F
LFN_LAST_FLAG = 0x40
LFN_CHARS_PER_ENTRY = 13

# characters a short name may contain besides letters and digits
_SHORT_EXTRA = set(b"$%'-_@~`!(){}^#&")
# additionally banned anywhere in a long name
_LONG_BANNED = set('"*/:<>?\\|') | {chr(c) for c in range(0x20)}

MAX_LONG_NAME = 255


def validate_long_name(name):
    if not name or name in (".", ".."):
        raise NameInvalidError(f"invalid name {name!r}")
    if len(name) > MAX_LONG_NAME:
        raise NameInvalidError(f"name longer than {MAX_LONG_NAME} characters")
    if any(ch in _LONG_BANNED for ch in name):
        raise NameInvalidError(f"name {name!r} contains a reserved character")
    if name[-1] in (" ", "."):
        raise NameInvalidError(f"name {name!r} ends in a space or dot")
    try:
        encoded = name.encode("utf-16-le")
    except UnicodeEncodeError as exc:
        raise NameInvalidError(f"name {name!r} not encodable") from exc
    if len(encoded) // 2 != len(name):
        # surrogate pairs would break the 13-unit slicing arithmetic
        raise NameInvalidError(f"name {name!r} uses characters outside the BMP")
    return name


def _short_char_ok(byte):
    return (0x41 <= byte <= 0x5A or 0x30 <= byte <= 0x39
            or byte in _SHORT_EXTRA or byte >= 0x80)


def is_valid_short(name):
    """True when `name` is already a storable 8.3 name (uppercase, one
    optional dot, charset-restricted)."""
    if not name or name != name.upper():
        return False
    base, dot, ext = name.partition(".")
    if not base or len(base) > 8 or (dot and not ext) or len(ext) > 3:
        return False
    if "." in ext:
        return False
    for part in (base, ext):
        if any(not _short_char_ok(b) for b in part.encode("latin-1", "replace")):
            return False
    return True


def pack_short(name):
    """'NAME.EXT' -> 11 raw bytes."""
    base, _, ext = name.partition(".")
    return base.encode("latin-1").ljust(8) + ext.encode("latin-1").ljust(3)


def render_short(raw11):
    """11 raw bytes -> 'NAME.EXT'. A leading 0x05 stands for 0xE5."""
    raw = bytes(raw11)
    if raw[0] == 0x05:
        raw = b"\xe5" + raw[1:]
    base = raw[:8].rstrip(b" ").decode("latin-1")
    ext = raw[8:].rstrip(b" ").decode("latin-1")
    return f"{base}.{ext}" if ext else base


def make_short_name(long_name, taken):
    """Derive an 8.3 short name for `long_name` that collides with nothing in
    `taken` (a set of 11-byte fields). Returns (raw11, needs_lfn)."""
    validate_long_name(long_name)
    if is_valid_short(long_name):
        raw = pack_short(long_name)
        if raw not in taken:
            return raw, False

    upper = long_name.upper()
    stem, _, ext = upper.rpartition(".")
    if not stem:
        stem, ext = ext, ""

    def clean(text, limit):
        out = []
        for ch in text:
            if ch in (" ", "."):
                continue
            b = ch.encode("latin-1", "replace")[0]
            out.append(chr(b) if _short_char_ok(b) else "_")
            if len(out) == limit:
                break
        return "".join(out)

    base = clean(stem, 8) or "_"
    extc = clean(ext, 3)

    candidate = f"{base}.{extc}" if extc else base
    if candidate == upper:
        # pure uppercase mapping: no numeric tail unless the name is taken
        raw = pack_short(candidate)
        if raw not in taken:
            return raw, candidate != long_name

    for n in range(1, 1000000):
        tail = f"~{n}"
        candidate = base[:8 - len(tail)] + tail
        raw = pack_short(f"{candidate}.{extc}" if extc else candidate)
        if raw not in taken:
            return raw, True
    raise NameInvalidError(f"cannot derive a unique short name for {long_name!r}")


def lfn_checksum(raw11):
    total = 0
    for byte in raw11:
        total = (((total >> 1) | (total << 7)) + byte) & 0xFF
    return total


def encode_lfn_entries(long_name, raw11):
    """Serialize the LFN chain for `long_name`, last fragment first, each
    entry 32 bytes, checksummed against the short name."""
    checksum = lfn_checksum(raw11)
    units = list(long_name.encode("utf-16-le"))
    units += [0x00, 0x00]                       # terminating NUL unit
    while len(units) % (LFN_CHARS_PER_ENTRY * 2):
        units += [0xFF, 0xFF]                   # pad to 13-unit boundary
    units = bytes(units)

    fragments = [units[i:i + LFN_CHARS_PER_ENTRY * 2]
                 for i in range(0, len(units), LFN_CHARS_PER_ENTRY * 2)]
    entries = []
    for seq, frag in enumerate(fragments, start=1):
        rec = bytearray(32)
        rec[0] = seq | (LFN_LAST_FLAG if seq == len(fragments) else 0)
        rec[1:11] = frag[0:10]
        rec[11] = LFN_ATTR
        rec[13] = checksum
        rec[14:26] = frag[10:22]
        rec[28:32] = frag[22:26]
        entries.append(bytes(rec))
    entries.reverse()
    return entries


class LfnAssembler:
    """Rebuilds long names from a directory scan. Feed each LFN record, then
    resolve against the short entry that follows the chain."""

    def __init__(self):
        self._parts = {}
        self._checksum = None
        self._expect = None

    def reset(self):
        self._parts.clear()
        self._checksum = None
        self._expect = None

    def feed(self, rec):
        # fragments with a wrong checksum or sequence leave holes that
        # resolve() rejects, falling the entry back to its short name
        seq = rec[0]
        order = seq & 0x3F
        if seq & LFN_LAST_FLAG:
            self.reset()
            self._checksum = rec[13]
            self._expect = order
        self._parts[order] = bytes(rec[1:11]) + bytes(rec[14:26]) + bytes(rec[28:32])

    def resolve(self, raw11):
        """Long name for the short entry `raw11`, or None if the chain is
        absent, incomplete, or checksum-mismatched."""
        try:
            if (self._expect is None
                    or self._checksum != lfn_checksum(raw11)
                    or sorted(self._parts) != list(range(1, self._expect + 1))):
                return None
            units = b"".join(self._parts[i] for i in range(1, self._expect + 1))
            name = units.decode("utf-16-le")
            for stop in ("\x00", "￿"):
                cut = name.find(stop)
                if cut != -1:
                    name = name[:cut]
            return name or None
        finally:
            self.reset()
