"""Text serialization of Lie elements and free DGLs.

An element is emitted as a signed sum of terms "p/q <bracket word>", where
the bracket word is fully left-nested: the length-n tensor part with
coefficients c_w becomes sum over words w of (c_w / n) [[...[w1,w2],...],wn].
For Lie elements this is exact (left-to-right bracketing recovers n times the
length-n part), so parse(emit(x)) == x bit for bit.  Non-Lie inputs are
refused rather than silently projected.

A DGL file is line-based:

    dgl
    gens a0:-1 a1:-1 x:0
    trunc 6
    d a0 = -1/2 [a0,a0]
    d x = 1 a1 - 1 a0 + ...

Comments start with '#'; blank lines are ignored.  Parse errors carry the
1-based line number.
"""

from fractions import Fraction

from .lie import (
    ConfigError, DomainError, StructError,
    GenSet, Elt, FreeDGL, bracket, dynkin_verify,
)


class ParseError(ValueError):
    """Malformed input text; .line is the 1-based line number when known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
        self.line = line


# ---------------------------------------------------------------------------
# Elements


def _bracket_word_str(gens, word):
    s = gens.names[word[0]]
    for i in word[1:]:
        s = "[%s,%s]" % (s, gens.names[i])
    return s


def emit_element(x):
    """Serialize a Lie element; deterministic term order (length, then word)."""
    ok, defects = dynkin_verify(x)
    if not ok:
        raise DomainError(
            "cannot serialize: not a Lie element (defect at lengths %s)"
            % [n for n, _ in defects])
    if not x.terms:
        return "0"
    bits = []
    for w in sorted(x.terms, key=lambda w: (len(w), w)):
        c = x.terms[w] / len(w)
        word = _bracket_word_str(x.gens, w)
        if not bits:
            bits.append("%s %s" % (c, word))
        elif c < 0:
            bits.append("- %s %s" % (-c, word))
        else:
            bits.append("+ %s %s" % (c, word))
    return " ".join(bits)


class _Tokens:
    def __init__(self, text, line=None):
        self.toks = []
        self.line = line
        i, n = 0, len(text)
        while i < n:
            ch = text[i]
            if ch.isspace():
                i += 1
            elif ch in "[],+-*":
                self.toks.append(ch)
                i += 1
            elif ch.isdigit():
                j = i
                while j < n and (text[j].isdigit() or text[j] == "/"):
                    j += 1
                self.toks.append(text[i:j])
                i = j
            elif ch.isalpha() or ch == "_":
                j = i
                while j < n and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                self.toks.append(text[i:j])
                i = j
            else:
                raise ParseError("unexpected character %r" % ch, line)
        self.pos = 0

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def next(self):
        t = self.peek()
        if t is None:
            raise ParseError("unexpected end of element", self.line)
        self.pos += 1
        return t

    def expect(self, tok):
        t = self.next()
        if t != tok:
            raise ParseError("expected %r, got %r" % (tok, t), self.line)


def _parse_scalar(tok, line):
    try:
        if "/" in tok:
            p, q = tok.split("/")
            return Fraction(int(p), int(q))
        return Fraction(int(tok))
    except (ValueError, ZeroDivisionError):
        raise ParseError("bad rational %r" % tok, line) from None


def _is_scalar(tok):
    return tok is not None and tok[0].isdigit()


def _parse_bracket_word(ts, gens, N, line):
    t = ts.next()
    if t == "[":
        left = _parse_bracket_word(ts, gens, N, line)
        ts.expect(",")
        right = _parse_bracket_word(ts, gens, N, line)
        ts.expect("]")
        return bracket(left, right)
    if t.isidentifier():
        try:
            idx = gens.index(t)
        except StructError:
            raise ParseError("unknown generator %r" % t, line) from None
        return Elt(gens, N, {(idx,): Fraction(1)})
    raise ParseError("expected a generator or '[', got %r" % t, line)


def parse_element(text, gens, N, line=None):
    """Parse an element expression over the given generators at truncation N.

    Accepts any two-argument bracket nesting, not only the left-nested form
    the emitter produces.
    """
    ts = _Tokens(text, line)
    if ts.peek() is None:
        raise ParseError("empty element", line)
    if ts.toks == ["0"]:
        return Elt(gens, N, {})
    total = Elt(gens, N, {})
    sign = Fraction(1)
    first = True
    while ts.peek() is not None:
        if not first:
            t = ts.next()
            if t == "+":
                sign = Fraction(1)
            elif t == "-":
                sign = Fraction(-1)
            else:
                raise ParseError("expected '+' or '-', got %r" % t, line)
        else:
            if ts.peek() == "-":
                ts.next()
                sign = Fraction(-1)
            elif ts.peek() == "+":
                ts.next()
            first = False
        coeff = Fraction(1)
        if _is_scalar(ts.peek()):
            coeff = _parse_scalar(ts.next(), line)
            if ts.peek() == "*":
                ts.next()
        word = _parse_bracket_word(ts, gens, N, line)
        total = total + word * (sign * coeff)
    return total


# ---------------------------------------------------------------------------
# DGL files


def emit_dgl(L):
    """Serialize a free DGL; one 'd' line per generator, in generator order."""
    gens = L.gens
    lines = ["dgl"]
    lines.append("gens " + " ".join(
        "%s:%d" % (n, d) for n, d in zip(gens.names, gens.degrees)))
    lines.append("trunc %d" % L.N)
    for i, name in enumerate(gens.names):
        img = L.diff.images.get(i)
        if img is None:
            img = Elt(gens, L.N, {})
        lines.append("d %s = %s" % (name, emit_element(img)))
    return "\n".join(lines) + "\n"


def parse_dgl(text):
    """Parse a DGL file back into a FreeDGL."""
    gens = None
    N = None
    raw_d = []
    stage = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if stage == 0:
            if line != "dgl":
                raise ParseError("expected 'dgl' header", lineno)
            stage = 1
            continue
        if line.startswith("gens "):
            if gens is not None:
                raise ParseError("duplicate gens line", lineno)
            pairs = []
            for item in line[5:].split():
                if ":" not in item:
                    raise ParseError("expected name:degree, got %r" % item, lineno)
                name, _, deg = item.rpartition(":")
                try:
                    deg = int(deg)
                except ValueError:
                    raise ParseError("bad degree in %r" % item, lineno) from None
                pairs.append((name, deg))
            try:
                gens = GenSet(pairs)
            except (StructError, DomainError) as e:
                raise ParseError(str(e), lineno) from None
            continue
        if line.startswith("trunc "):
            if N is not None:
                raise ParseError("duplicate trunc line", lineno)
            try:
                N = int(line[6:])
            except ValueError:
                raise ParseError("bad truncation %r" % line[6:], lineno) from None
            if N < 1:
                raise ParseError("truncation must be >= 1", lineno)
            continue
        if line.startswith("d "):
            if gens is None or N is None:
                raise ParseError("'d' line before gens/trunc", lineno)
            body = line[2:]
            if "=" not in body:
                raise ParseError("expected 'd <name> = <element>'", lineno)
            name, _, expr = body.partition("=")
            name = name.strip()
            try:
                idx = gens.index(name)
            except StructError:
                raise ParseError("unknown generator %r" % name, lineno) from None
            raw_d.append((lineno, idx, expr.strip()))
            continue
        raise ParseError("unrecognized line %r" % line, lineno)
    if gens is None:
        raise ParseError("missing gens line")
    if N is None:
        raise ParseError("missing trunc line")
    images = {}
    for lineno, idx, expr in raw_d:
        if idx in images:
            raise ParseError("duplicate differential for %r" % gens.names[idx],
                             lineno)
        img = parse_element(expr, gens, N, line=lineno)
        if not img.is_zero():
            images[idx] = img
    try:
        return FreeDGL(gens, N, images)
    except (DomainError, StructError, ConfigError) as e:
        raise ParseError(str(e)) from None
