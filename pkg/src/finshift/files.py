"""Line-oriented text formats for groups, towers, SFT specs, block maps and
patterns.

All formats are UTF-8; blank lines are ignored.  Parse failures raise
:class:`FormatError` carrying the file and line number.
"""

from __future__ import annotations

import os

from .errors import FormatError
from .groups import FiniteGroup, GroupTower, build_tower, cyclic, from_table, product
from .patterns import Alphabet, Pattern
from .shiftspace import BlockMap, SftSpec, ShiftSpace


def _lines(path):
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if line:
                yield lineno, line


def _ints(tokens, path, lineno):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"expected integers, got {tokens!r}", path, lineno) from None


def read_group(path) -> FiniteGroup:
    """Parse a group file: cyclic, product-of-files, or explicit table."""
    it = _lines(path)
    try:
        lineno, header = next(it)
    except StopIteration:
        raise FormatError("empty group file", path) from None
    parts = header.split()
    if parts[0] != "group" or len(parts) < 2:
        raise FormatError("expected a 'group <kind> ...' header", path, lineno)
    kind = parts[1]
    base = os.path.dirname(os.path.abspath(path))
    if kind == "cyclic":
        if len(parts) != 3:
            raise FormatError("usage: group cyclic <n>", path, lineno)
        (n,) = _ints(parts[2:], path, lineno)
        return cyclic(n)
    if kind == "product":
        if len(parts) != 4:
            raise FormatError("usage: group product <file> <file>", path, lineno)
        left = read_group(os.path.join(base, parts[2]))
        right = read_group(os.path.join(base, parts[3]))
        return product(left, right)
    if kind == "table":
        if len(parts) != 3:
            raise FormatError("usage: group table <n>", path, lineno)
        (n,) = _ints(parts[2:], path, lineno)
        rows = []
        for lineno, line in it:
            rows.append(_ints(line.split(), path, lineno))
            if len(rows) == n:
                break
        if len(rows) != n:
            raise FormatError(f"expected {n} table rows, got {len(rows)}", path)
        return from_table(rows)
    raise FormatError(f"unknown group kind {kind!r}", path, lineno)


def read_tower(path) -> GroupTower:
    """Parse a tower file: a 'tower' header, then level and embed lines."""
    levels = []
    embeddings = []
    base = os.path.dirname(os.path.abspath(path))
    it = _lines(path)
    try:
        lineno, header = next(it)
    except StopIteration:
        raise FormatError("empty tower file", path) from None
    if header != "tower":
        raise FormatError("expected a 'tower' header", path, lineno)
    for lineno, line in it:
        parts = line.split()
        if parts[0] == "level":
            if len(parts) != 2:
                raise FormatError("usage: level <groupfile>", path, lineno)
            levels.append(read_group(os.path.join(base, parts[1])))
        elif parts[0] == "embed":
            if len(parts) < 3 or parts[2] != "pairs":
                raise FormatError("usage: embed <k> pairs i->j ...", path, lineno)
            (k,) = _ints(parts[1:2], path, lineno)
            if k != len(embeddings):
                raise FormatError(
                    f"embed lines must appear in order; expected {len(embeddings)}",
                    path,
                    lineno,
                )
            pairs = {}
            for tok in parts[3:]:
                if "->" not in tok:
                    raise FormatError(f"bad pair {tok!r}", path, lineno)
                a, b = tok.split("->", 1)
                (i,) = _ints([a], path, lineno)
                (j,) = _ints([b], path, lineno)
                pairs[i] = j
            if k >= len(levels) or k + 1 >= len(levels):
                raise FormatError(
                    "embed line before both levels are declared", path, lineno
                )
            lo = levels[k]
            if sorted(pairs) != list(range(lo.order)):
                raise FormatError(
                    f"embedding must be total on 0..{lo.order - 1}", path, lineno
                )
            embeddings.append(tuple(pairs[i] for i in range(lo.order)))
        else:
            raise FormatError(f"unknown tower directive {parts[0]!r}", path, lineno)
    return build_tower(levels, embeddings)


def read_sft(path) -> SftSpec:
    """Parse an SFT spec file."""
    base = os.path.dirname(os.path.abspath(path))
    group = None
    alphabet = None
    shape = None
    forbid_rows = []
    it = _lines(path)
    try:
        lineno, header = next(it)
    except StopIteration:
        raise FormatError("empty sft file", path) from None
    if header != "sft":
        raise FormatError("expected an 'sft' header", path, lineno)
    for lineno, line in it:
        parts = line.split()
        if parts[0] == "group" and len(parts) == 2:
            group = read_group(os.path.join(base, parts[1]))
        elif parts[0] == "alphabet":
            alphabet = Alphabet(tuple(parts[1:]))
        elif parts[0] == "shape":
            shape = tuple(_ints(parts[1:], path, lineno))
        elif parts[0] == "forbid":
            forbid_rows.append((lineno, parts[1:]))
        else:
            raise FormatError(f"unknown sft directive {parts[0]!r}", path, lineno)
    if group is None or alphabet is None or shape is None:
        raise FormatError("sft file needs group, alphabet and shape lines", path)
    if len(set(shape)) != len(shape):
        raise FormatError("shape indices must be distinct", path)
    # symbols are positional against the declared shape order
    order = sorted(range(len(shape)), key=lambda i: shape[i])
    sorted_shape = tuple(shape[i] for i in order)
    forbidden = set()
    for lineno, row in forbid_rows:
        if len(row) != len(shape):
            raise FormatError(
                f"forbid line has {len(row)} symbols for shape of size {len(shape)}",
                path,
                lineno,
            )
        try:
            symbols = tuple(alphabet.index(row[i]) for i in order)
        except Exception:
            raise FormatError(f"unknown symbol in {row!r}", path, lineno) from None
        forbidden.add(Pattern(group, sorted_shape, symbols))
    return SftSpec(group, alphabet, sorted_shape, frozenset(forbidden))


def read_blockmap(path, domain: ShiftSpace, target_alphabet: Alphabet) -> BlockMap:
    """Parse a block map file against an already-enumerated domain."""
    window = None
    table = {}
    for lineno, line in _lines(path):
        parts = line.split()
        if parts[0] == "window":
            window = tuple(sorted(set(_ints(parts[1:], path, lineno))))
        elif parts[0] == "map":
            if "->" not in parts:
                raise FormatError("usage: map <symbols...> -> <symbol>", path, lineno)
            arrow = parts.index("->")
            ins = parts[1:arrow]
            outs = parts[arrow + 1 :]
            if window is None:
                raise FormatError("map line before the window line", path, lineno)
            if len(ins) != len(window) or len(outs) != 1:
                raise FormatError("map arity does not match the window", path, lineno)
            key = tuple(domain.alphabet.index(s) for s in ins)
            table[key] = target_alphabet.index(outs[0])
        else:
            raise FormatError(f"unknown block map directive {parts[0]!r}", path, lineno)
    if window is None:
        raise FormatError("block map file needs a window line", path)
    return BlockMap(domain, window, table, target_alphabet)


def format_pattern(w: Pattern, alphabet: Alphabet) -> str:
    shape = " ".join(str(i) for i in w.shape)
    data = " ".join(alphabet.symbols[s] for s in w.symbols)
    return f"shape {shape}\ndata {data}"


def read_pattern(path, group: FiniteGroup, alphabet: Alphabet) -> Pattern:
    shape = None
    symbols = None
    for lineno, line in _lines(path):
        parts = line.split()
        if parts[0] == "shape":
            shape = tuple(_ints(parts[1:], path, lineno))
        elif parts[0] == "data":
            symbols = tuple(alphabet.index(s) for s in parts[1:])
        else:
            raise FormatError(f"unknown pattern directive {parts[0]!r}", path, lineno)
    if shape is None or symbols is None:
        raise FormatError("pattern file needs shape and data lines", path)
    if len(shape) != len(symbols):
        raise FormatError("shape and data lines have different lengths", path)
    from .patterns import make_pattern

    return make_pattern(group, dict(zip(shape, symbols)))
