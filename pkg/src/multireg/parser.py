"""Parsing for the line-oriented job format and for polynomials.

A job file fixes the ring on its first directive line and then gives
the input object:

    ring p=32003 n=[1,2]
    ideal x0^2*y0^2 + x1^2*y1^2 + x0*x1*y2^2; x0^3*y2 + x1^3*y0 + x1^3*y1

or a presented module by generator rows and a relation matrix:

    ring p=32003 n=[1,1]
    module rows=[(1,0),(1,0),(0,1),(0,1)] matrix [[-y0,0,-y0,0],
      [0,-y1,0,-y1],[x0,x1,0,0],[0,0,x1,x0]]

Variables are x0.., y0.., z0.., w0.. for up to four factors, or
v{i}_{j} in general.  Polynomials use +, -, *, ^ and integer
coefficients; '#' starts a comment.  Errors carry line and column.
"""

import re

from .errors import InhomogeneousError, ParseError
from .ringcore import (
    FreeModuleSpec,
    MatrixOverS,
    Poly,
    Presentation,
    RingSpec,
    zero_degree,
)

_TOKEN = re.compile(r"""
    (?P<num>\d+)
  | (?P<name>[A-Za-z][A-Za-z0-9_]*)
  | (?P<op>[-+*^();,\[\]=])
""", re.VERBOSE)


class _Tokens:
    def __init__(self, text):
        self.items = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            body = line.split("#", 1)[0]
            pos = 0
            while pos < len(body):
                ch = body[pos]
                if ch.isspace():
                    pos += 1
                    continue
                m = _TOKEN.match(body, pos)
                if not m:
                    raise ParseError(f"unexpected character {ch!r}",
                                     lineno, pos + 1)
                self.items.append((m.group(0), lineno, pos + 1))
                pos = m.end()
        self.k = 0

    def peek(self):
        return self.items[self.k][0] if self.k < len(self.items) else None

    def next(self):
        if self.k >= len(self.items):
            last = self.items[-1] if self.items else (None, 0, 0)
            raise ParseError("unexpected end of input", last[1], last[2])
        tok = self.items[self.k]
        self.k += 1
        return tok

    def expect(self, text):
        tok, line, col = self.next()
        if tok != text:
            raise ParseError(f"expected {text!r}, found {tok!r}", line, col)
        return tok

    def error(self, message):
        if self.k < len(self.items):
            _, line, col = self.items[self.k]
        elif self.items:
            _, line, col = self.items[-1]
        else:
            line = col = 1
        raise ParseError(message, line, col)


def _parse_int(tokens):
    tok, line, col = tokens.next()
    sign = 1
    if tok == "-":
        sign = -1
        tok, line, col = tokens.next()
    if not tok.isdigit():
        raise ParseError(f"expected an integer, found {tok!r}", line, col)
    return sign * int(tok)


def _parse_int_list(tokens):
    tokens.expect("[")
    out = [_parse_int(tokens)]
    while tokens.peek() == ",":
        tokens.next()
        out.append(_parse_int(tokens))
    tokens.expect("]")
    return out


def _parse_degree_tuple(tokens):
    tokens.expect("(")
    out = [_parse_int(tokens)]
    while tokens.peek() == ",":
        tokens.next()
        out.append(_parse_int(tokens))
    tokens.expect(")")
    return tuple(out)


# polynomial grammar: expr := term (('+'|'-') term)*;
# term := factor ('*' factor)*; factor := atom ('^' num)?;
# atom := num | var | '(' expr ')' | '-' factor

def _parse_poly(tokens, ring):
    f = _parse_term(tokens, ring)
    while tokens.peek() in ("+", "-"):
        op, _, _ = tokens.next()
        g = _parse_term(tokens, ring)
        f = f + g if op == "+" else f - g
    return f


def _parse_term(tokens, ring):
    f = _parse_factor(tokens, ring)
    while tokens.peek() == "*":
        tokens.next()
        f = f * _parse_factor(tokens, ring)
    return f


def _parse_factor(tokens, ring):
    f = _parse_atom(tokens, ring)
    if tokens.peek() == "^":
        tokens.next()
        e = _parse_int(tokens)
        if e < 0:
            tokens.error("negative exponent")
        f = f ** e
    return f


def _parse_atom(tokens, ring):
    tok, line, col = tokens.next()
    if tok == "-":
        return -_parse_factor(tokens, ring)
    if tok == "(":
        f = _parse_poly(tokens, ring)
        tokens.expect(")")
        return f
    if tok.isdigit():
        return Poly.constant(ring, int(tok))
    idx = ring.var_by_name(tok)
    if idx is None:
        raise ParseError(f"unknown variable {tok!r}", line, col)
    return Poly.variable(ring, idx)


def poly_from_string(ring, text):
    """Parse one polynomial over the ring."""
    tokens = _Tokens(text)
    f = _parse_poly(tokens, ring)
    if tokens.peek() is not None:
        tokens.error("trailing input after polynomial")
    return f


class JobSpec:
    """Parsed input: the ring, and either an ideal (list of
    polynomials) or a presented module."""

    __slots__ = ("ring", "kind", "ideal_gens", "presentation")

    def __init__(self, ring, kind, ideal_gens=None, presentation=None):
        self.ring = ring
        self.kind = kind
        self.ideal_gens = ideal_gens
        self.presentation = presentation

    def module(self):
        """The presentation this job denotes (S/I for ideals)."""
        if self.kind == "ideal":
            return Presentation.quotient_by_ideal(self.ring, self.ideal_gens)
        return self.presentation


def parse_input(text, prime_override=None):
    """Parse a full job description; homogeneity of every entry is
    checked, and all errors carry positions."""
    tokens = _Tokens(text)
    tok, line, col = tokens.next()
    if tok != "ring":
        raise ParseError("input must start with a 'ring' line", line, col)
    p = None
    n = None
    while tokens.peek() in ("p", "n"):
        what, line, col = tokens.next()
        tokens.expect("=")
        if what == "p":
            p = _parse_int(tokens)
        else:
            n = _parse_int_list(tokens)
    if n is None:
        tokens.error("ring line needs n=[...]")
    if prime_override is not None:
        p = prime_override
    if p is None:
        p = 32003
    if any(ni < 1 for ni in n):
        raise ParseError(f"factor dimensions must be >= 1, got {n}",
                         line, col)
    try:
        ring = RingSpec(tuple(n), p)
    except ValueError as exc:
        raise ParseError(str(exc), line, col) from exc
    tok, line, col = tokens.next()
    if tok == "ideal":
        gens = [_parse_poly(tokens, ring)]
        while tokens.peek() == ";":
            tokens.next()
            gens.append(_parse_poly(tokens, ring))
        if tokens.peek() is not None:
            tokens.error("trailing input after ideal")
        for g in gens:
            try:
                g.degree()
            except InhomogeneousError:
                raise ParseError("inhomogeneous ideal generator "
                                 f"{g}", line, col) from None
        return JobSpec(ring, "ideal", ideal_gens=gens)
    if tok == "module":
        tok2, line2, col2 = tokens.next()
        if tok2 != "rows":
            raise ParseError("module needs rows=[(..),..]", line2, col2)
        tokens.expect("=")
        tokens.expect("[")
        rows = [_parse_degree_tuple(tokens)]
        while tokens.peek() == ",":
            tokens.next()
            rows.append(_parse_degree_tuple(tokens))
        tokens.expect("]")
        for tw in rows:
            if len(tw) != ring.r:
                tokens.error(f"row degree {tw} has wrong rank")
        tok3, line3, col3 = tokens.next()
        if tok3 != "matrix":
            raise ParseError("module needs matrix [[..],..]", line3, col3)
        tokens.expect("[")
        entries = []
        while True:
            tokens.expect("[")
            row = [_parse_poly(tokens, ring)]
            while tokens.peek() == ",":
                tokens.next()
                row.append(_parse_poly(tokens, ring))
            tokens.expect("]")
            entries.append(row)
            if tokens.peek() == ",":
                tokens.next()
                continue
            break
        tokens.expect("]")
        if tokens.peek() is not None:
            tokens.error("trailing input after matrix")
        if len(entries) != len(rows):
            tokens.error(f"matrix has {len(entries)} rows, expected "
                         f"{len(rows)}")
        ncols = len(entries[0])
        for row in entries:
            if len(row) != ncols:
                tokens.error("ragged matrix")
        F0 = FreeModuleSpec(ring, rows)
        col_degs = []
        for l in range(ncols):
            deg = None
            for k, row in enumerate(entries):
                f = row[l]
                if not f:
                    continue
                try:
                    fd = f.degree()
                except InhomogeneousError:
                    raise ParseError(
                        f"matrix entry ({k + 1},{l + 1}) inhomogeneous",
                        line3, col3) from None
                total = tuple(a + b for a, b in zip(fd, rows[k]))
                if deg is None:
                    deg = total
                elif deg != total:
                    raise ParseError(
                        f"column {l + 1} mixes degrees {deg} and {total}",
                        line3, col3)
            col_degs.append(deg if deg is not None else zero_degree(ring.r))
        src = FreeModuleSpec(ring, col_degs)
        try:
            rel = MatrixOverS.from_entries(src, F0, entries)
        except InhomogeneousError as exc:
            raise ParseError(str(exc), line3, col3) from exc
        return JobSpec(ring, "module",
                       presentation=Presentation(F0, rel))
    raise ParseError(f"expected 'ideal' or 'module', found {tok!r}",
                     line, col)
