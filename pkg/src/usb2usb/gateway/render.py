"""Canonical text renderings of listings and volume info.

The CLI prints these and the web UI regenerates them from the same JSON, so
they are kept deliberately mechanical: no locale, no human units, no
timestamps. Any change here must be mirrored in the frontend formatter.
"""


def listing_lines(entries):
    """One line per entry: type flag, byte size right-aligned, name.

    Folders sort before files; both groups sort case-insensitively.
    `entries` is any iterable of objects/dicts with name, size_bytes, is_dir.
    """
    rows = [_row(e) for e in entries]
    rows.sort(key=lambda r: (not r[0], r[2].casefold()))
    return [f"{'d' if is_dir else '-'} {size:>10} {name}"
            for is_dir, size, name in rows]


def info_line(volume):
    """Single footer line with label, variant, and byte totals."""
    v = _get(volume)
    return (f"label={v('label')} variant={v('variant')} "
            f"total={v('total_bytes')} free={v('free_bytes')}")


def _row(entry):
    g = _get(entry)
    return bool(g("is_dir")), int(g("size_bytes")), str(g("name"))


def _get(obj):
    if isinstance(obj, dict):
        return obj.__getitem__
    return lambda key: getattr(obj, key)
