"""Text formats for words, pairs, factorizations, braids, presentations and certificates.

Grammars::

    word           x1 x2^-1 x1^3        (identity: e)
    pair           ( <word> | <word> )
    factorization  [ <entry> ; <entry> ; ... ]     entry = pair or bare word
    braid          1 -2 1                (s_1 s_2^-1 s_1; strands given separately)
    presentation   < a b | a b a^-1 b^-1 , a^3 >
    certificate    one factor per line (or ';'-separated):  + r2 by w1 w2^-1

Parse errors raise :class:`~hurwitzwp.errors.ParseError` with a 1-based
line and column into the text that was handed in.
"""

from __future__ import annotations

import re
from typing import Callable

from .errors import ParseError
from .freegroup import Certificate, CertificateFactor, Presentation, Word, reduce
from .hurwitz import BraidWord, Factorization
from .product import PairElement

_SYMBOL = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)(?:\^(-?\d+))?")
_INDEXED = re.compile(r"([a-z])(\d+)$")


def _position(text: str, offset: int) -> tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


def _fail(text: str, offset: int, message: str) -> ParseError:
    return ParseError(message, *_position(text, offset))


def _word_tokens(text: str, start: int, end: int) -> list[tuple[str, int, int]]:
    """Split text[start:end] into (name, exponent, offset) triples."""
    out = []
    i = start
    while i < end:
        if text[i].isspace():
            i += 1
            continue
        m = _SYMBOL.match(text, i, end)
        if not m:
            raise _fail(text, i, f"unexpected character {text[i]!r} in word")
        after = m.end()
        if after < end and not text[after].isspace():
            raise _fail(text, after, f"unexpected character {text[after]!r} in word")
        exp = int(m.group(2)) if m.group(2) is not None else 1
        if exp == 0:
            raise _fail(text, m.start(2), "exponent must be nonzero")
        out.append((m.group(1), exp, i))
        i = after
    return out


def _indexed_resolver(prefix: str) -> Callable[[str], int | None]:
    def resolve(name: str) -> int | None:
        m = _INDEXED.match(name)
        if m and m.group(1) == prefix and int(m.group(2)) >= 1:
            return int(m.group(2))
        return None

    return resolve


def _letters(
    text: str, start: int, end: int, resolve: Callable[[str], int | None]
) -> list[int]:
    tokens = _word_tokens(text, start, end)
    if len(tokens) == 1 and tokens[0][0] == "e" and tokens[0][1] == 1:
        return []
    raw: list[int] = []
    for name, exp, off in tokens:
        if name == "e":
            raise _fail(text, off, "'e' denotes the empty word and must stand alone")
        k = resolve(name)
        if k is None:
            raise _fail(text, off, f"unknown generator {name!r}")
        raw += [k if exp > 0 else -k] * abs(exp)
    if not tokens:
        raise _fail(text, start, "empty word (write 'e' for the identity)")
    return raw


def _build(text: str, start: int, raw: list[int], rank: int | None) -> Word:
    top = max((abs(a) for a in raw), default=1)
    if rank is None:
        rank = top
    elif top > rank:
        raise _fail(text, start, f"generator x{top} exceeds the declared rank {rank}")
    return reduce(raw, rank)


def parse_word(text: str, rank: int | None = None, prefix: str = "x") -> Word:
    """Parse ``x1 x2^-1 ...``; the rank defaults to the largest index used."""
    raw = _letters(text, 0, len(text), _indexed_resolver(prefix))
    return _build(text, 0, raw, rank)


def format_word(w: Word, names: Callable[[int], str] | None = None) -> str:
    if not w.letters:
        return "e"
    name = names or (lambda k: f"x{k}")
    parts = []
    a = w.letters
    i = 0
    while i < len(a):
        j = i
        while j < len(a) and a[j] == a[i]:
            j += 1
        run = (j - i) * (1 if a[i] > 0 else -1)
        parts.append(name(abs(a[i])) + ("" if run == 1 else f"^{run}"))
        i = j
    return " ".join(parts)


def format_pair(p: PairElement) -> str:
    return f"({format_word(p.left)}|{format_word(p.right)})"


def format_factorization(F: Factorization) -> str:
    parts = []
    for f in F.elements:
        parts.append(format_pair(f) if isinstance(f, PairElement) else format_word(f))
    return "[ " + " ; ".join(parts) + " ]"


def _split_top(text: str, start: int, end: int, sep: str) -> list[tuple[int, int]]:
    """Split on ``sep`` outside parentheses."""
    pieces, depth, last = [], 0, start
    for i in range(start, end):
        c = text[i]
        if c == "(":
            depth += 1
        elif c == ")":
            depth -= 1
            if depth < 0:
                raise _fail(text, i, "unbalanced ')'")
        elif c == sep and depth == 0:
            pieces.append((last, i))
            last = i + 1
    if depth:
        raise _fail(text, end, "unbalanced '('")
    pieces.append((last, end))
    return pieces


def _strip(text: str, start: int, end: int) -> tuple[int, int]:
    while start < end and text[start].isspace():
        start += 1
    while end > start and text[end - 1].isspace():
        end -= 1
    return start, end


def parse_factorization(
    text: str, ranks: tuple[int, int] | int | None = None
) -> Factorization:
    """Parse ``[ (x1|e) ; (e|x2^-1) ]`` or ``[ x1 ; x2 ]``.

    Ranks default to the largest generator index used in each coordinate.
    """
    s, e = _strip(text, 0, len(text))
    if s >= e or text[s] != "[":
        raise _fail(text, s, "factorization must start with '['")
    if text[e - 1] != "]":
        raise _fail(text, e - 1, "factorization must end with ']'")
    inner_s, inner_e = _strip(text, s + 1, e - 1)
    if inner_s >= inner_e:
        raise _fail(text, inner_s, "empty factorization")
    entries = []
    for a, b in _split_top(text, inner_s, inner_e, ";"):
        a, b = _strip(text, a, b)
        if a >= b:
            raise _fail(text, a, "empty entry")
        if text[a] == "(":
            if text[b - 1] != ")":
                raise _fail(text, b - 1, "pair must end with ')'")
            halves = _split_top(text, a + 1, b - 1, "|")
            if len(halves) != 2:
                raise _fail(text, a, "pair must have exactly one '|'")
            (ls, le), (rs, re_) = (_strip(text, *h) for h in halves)
            resolve = _indexed_resolver("x")
            entries.append(("p", (ls, _letters(text, ls, le, resolve)), (rs, _letters(text, rs, re_, resolve))))
        else:
            entries.append(("w", (a, _letters(text, a, b, _indexed_resolver("x")))))
    kinds = {k[0] for k in entries}
    if len(kinds) != 1:
        raise _fail(text, s, "cannot mix pairs and bare words in one factorization")
    if kinds == {"w"}:
        r = ranks if isinstance(ranks, int) else None
        if r is None:
            r = max((abs(x) for _, (_, raw) in entries for x in raw), default=1)
        return Factorization(_build(text, off, raw, r) for _, (off, raw) in entries)
    if isinstance(ranks, tuple):
        r1, r2 = ranks
    else:
        r1 = max((abs(x) for _, (_, raw), _ in entries for x in raw), default=1)
        r2 = max((abs(x) for _, _, (_, raw) in entries for x in raw), default=1)
    return Factorization(
        PairElement(_build(text, lo, lraw, r1), _build(text, ro, rraw, r2))
        for _, (lo, lraw), (ro, rraw) in entries
    )


def parse_braid(text: str, strands: int) -> BraidWord:
    letters = []
    for m in re.finditer(r"\S+", text):
        tok = m.group()
        try:
            a = int(tok)
        except ValueError:
            raise _fail(text, m.start(), f"braid letter {tok!r} is not an integer") from None
        if a == 0 or abs(a) > strands - 1:
            raise _fail(text, m.start(), f"s_{abs(a)} is not a generator of B_{strands}")
        letters.append(a)
    return BraidWord(strands, tuple(letters))


def format_braid(b: BraidWord) -> str:
    return " ".join(str(a) for a in b.letters)


def parse_presentation(text: str) -> Presentation:
    s, e = _strip(text, 0, len(text))
    if s >= e or text[s] != "<":
        raise _fail(text, s, "presentation must start with '<'")
    if text[e - 1] != ">":
        raise _fail(text, e - 1, "presentation must end with '>'")
    bar = text.find("|", s, e)
    if bar < 0:
        raise _fail(text, s, "presentation needs a '|' between generators and relators")
    names: list[str] = []
    for m in re.finditer(r"\S+", text[s + 1 : bar]):
        off = s + 1 + m.start()
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", m.group()):
            raise _fail(text, off, f"bad generator name {m.group()!r}")
        if m.group() == "e":
            raise _fail(text, off, "'e' is reserved for the identity")
        if m.group() in names:
            raise _fail(text, off, f"duplicate generator {m.group()!r}")
        names.append(m.group())
    if not names:
        raise _fail(text, s + 1, "presentation needs at least one generator")
    index = {n: i for i, n in enumerate(names, 1)}
    relators = []
    rs, re_ = _strip(text, bar + 1, e - 1)
    if rs < re_:
        for a, b in _split_top(text, rs, re_, ","):
            a, b = _strip(text, a, b)
            raw = _letters(text, a, b, index.get)
            relators.append(_build(text, a, raw, len(names)))
    return Presentation(tuple(names), tuple(relators))


def parse_presentation_word(text: str, p: Presentation) -> Word:
    """A word written in the presentation's generator names."""
    index = {n: i for i, n in enumerate(p.generators, 1)}
    return _build(text, 0, _letters(text, 0, len(text), index.get), p.rank)


def format_presentation(p: Presentation) -> str:
    names = lambda k: p.generators[k - 1]  # noqa: E731
    rels = " , ".join(format_word(r, names) for r in p.relators)
    return f"< {' '.join(p.generators)} | {rels} >".replace("|  >", "| >")


def parse_certificate(text: str, rank: int | None = None) -> Certificate:
    """Parse ``+ r2 by w1 w2^-1`` factors, one per line or ';'-separated."""
    factors = []
    pos = 0
    raw_factors = []
    for line in text.split("\n"):
        for piece in line.split(";"):
            raw_factors.append((pos, piece))
            pos += len(piece) + 1
    conj = []
    for off, piece in raw_factors:
        stripped = piece.split("#", 1)[0]
        if not stripped.strip():
            continue
        m = re.match(r"\s*([+-])\s*r(\d+)\s+by\s+", stripped)
        if not m:
            lead = len(stripped) - len(stripped.lstrip())
            raise _fail(text, off + lead, "expected '<sign> r<j> by <word>'")
        j = int(m.group(2))
        if j < 1:
            raise _fail(text, off + m.start(2), "relator indices start at 1")
        start = off + m.end()
        end = off + len(stripped.rstrip())
        raw = _letters(text, start, end, _indexed_resolver("w"))
        conj.append((start, raw))
        factors.append((j, 1 if m.group(1) == "+" else -1))
    if rank is None:
        rank = max((abs(a) for _, raw in conj for a in raw), default=1)
    return Certificate(
        tuple(
            CertificateFactor(j, sign, _build(text, start, raw, rank))
            for (j, sign), (start, raw) in zip(factors, conj)
        )
    )


def format_certificate(c: Certificate) -> str:
    return "\n".join(
        f"{'+' if f.sign > 0 else '-'} r{f.relator} by {format_word(f.conjugator, lambda k: f'w{k}')}"
        for f in c.factors
    )
