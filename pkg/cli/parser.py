"""Expression language for the command line.

Grammar, lowest precedence first::

    expr    := ['+'|'-'] product (('+'|'-') product)*
    product := term (('boxast'|'boxdot'|'sh'|'st') term)*
    term    := rational ['*'] concat | rational | concat
    concat  := atom (['*'] atom)*
    atom    := word | 'P(' expr ')' | 'D(' expr ')' | 'ds(' expr ',' expr ')'
             | 'gsh(' int (',' int)* ')' | '(' expr ')'
    word    := ('e(' int [',' int] ')')+

Adjacent letters form one word; any other juxtaposition (or ``*``) between
atoms is concatenation. Products are left-associative.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Callable, Dict, Tuple

import pyparsing as pp

from src.algebra.involution import boxdot, involution_p
from src.algebra.products import boxast, ds, harmonic, shuffle
from src.core.errors import ExpressionSyntaxError
from src.core.lincomb import LinComb
from src.core.words import Letter, Word
from src.qseries.derivative import derivative
from src.qseries.regularized import GshIndex, gsh_in_g

# Binding strength used by the renderer
SUM, PRODUCT, SCALED, CONCAT, ATOM = range(5)

PRODUCT_OPS: Dict[str, Callable[[LinComb, LinComb], LinComb]] = {
    "boxast": boxast,
    "boxdot": boxdot,
    "sh": shuffle,
    "st": harmonic,
}

UNARY_OPS: Dict[str, Callable[[LinComb], LinComb]] = {
    "P": involution_p,
    "D": derivative,
}


def _wrap(node: "Expression", parent: int) -> str:
    text = node.render()
    return f"({text})" if node.precedence <= parent else text


class Expression:
    """Base of the AST node types."""

    precedence = ATOM

    def render(self) -> str:
        raise NotImplementedError

    def evaluate(self) -> LinComb:
        raise NotImplementedError

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class WordLiteral(Expression):
    word: Word

    def render(self) -> str:
        return self.word.render()

    def evaluate(self) -> LinComb:
        return LinComb.word(self.word)


@dataclass(frozen=True)
class Constant(Expression):
    """A non-negative rational multiple of the empty word."""

    value: Fraction

    precedence = SCALED

    def __post_init__(self) -> None:
        if self.value < 0:
            raise ValueError("constants are non-negative; use a leading '-'")
        object.__setattr__(self, "value", Fraction(self.value))

    def render(self) -> str:
        return str(self.value)

    def evaluate(self) -> LinComb:
        return LinComb.one() * self.value


@dataclass(frozen=True)
class Scaled(Expression):
    coeff: Fraction
    operand: Expression

    precedence = SCALED

    def __post_init__(self) -> None:
        if self.coeff <= 0:
            raise ValueError("scalars are positive; use a leading '-'")
        object.__setattr__(self, "coeff", Fraction(self.coeff))

    def render(self) -> str:
        return f"{self.coeff}*{_wrap(self.operand, SCALED)}"

    def evaluate(self) -> LinComb:
        return self.operand.evaluate() * self.coeff


@dataclass(frozen=True)
class Concat(Expression):
    parts: Tuple[Expression, ...]

    precedence = CONCAT

    def __post_init__(self) -> None:
        if len(self.parts) < 2:
            raise ValueError("Concat needs at least two parts")

    def render(self) -> str:
        return "*".join(_wrap(p, CONCAT) for p in self.parts)

    def evaluate(self) -> LinComb:
        return reduce(lambda acc, p: acc.concat(p.evaluate()), self.parts[1:], self.parts[0].evaluate())


@dataclass(frozen=True)
class Product(Expression):
    op: str
    left: Expression
    right: Expression

    precedence = PRODUCT

    def __post_init__(self) -> None:
        if self.op not in PRODUCT_OPS:
            raise ValueError(f"unknown product {self.op!r}")

    def render(self) -> str:
        left = self.left.render() if self.left.precedence >= PRODUCT else f"({self.left.render()})"
        return f"{left} {self.op} {_wrap(self.right, PRODUCT)}"

    def evaluate(self) -> LinComb:
        return PRODUCT_OPS[self.op](self.left.evaluate(), self.right.evaluate())


@dataclass(frozen=True)
class Apply(Expression):
    fn: str
    arg: Expression

    def __post_init__(self) -> None:
        if self.fn not in UNARY_OPS:
            raise ValueError(f"unknown operator {self.fn!r}")

    def render(self) -> str:
        return f"{self.fn}({self.arg.render()})"

    def evaluate(self) -> LinComb:
        return UNARY_OPS[self.fn](self.arg.evaluate())


@dataclass(frozen=True)
class Ds(Expression):
    left: Expression
    right: Expression

    def render(self) -> str:
        return f"ds({self.left.render()}, {self.right.render()})"

    def evaluate(self) -> LinComb:
        return ds(self.left.evaluate(), self.right.evaluate())


@dataclass(frozen=True)
class Gsh(Expression):
    """Regularized bracket, expanded into bi-brackets (depth <= 3)."""

    ks: Tuple[int, ...]

    def render(self) -> str:
        return GshIndex(self.ks).label()

    def evaluate(self) -> LinComb:
        return gsh_in_g(GshIndex(self.ks))


@dataclass(frozen=True)
class Sum(Expression):
    terms: Tuple[Tuple[str, Expression], ...]

    precedence = SUM

    def __post_init__(self) -> None:
        if not self.terms or any(sign not in "+-" or len(sign) != 1 for sign, _ in self.terms):
            raise ValueError("Sum needs (sign, node) terms with sign '+' or '-'")

    def render(self) -> str:
        parts = []
        for i, (sign, node) in enumerate(self.terms):
            body = _wrap(node, SUM)
            if i == 0:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def evaluate(self) -> LinComb:
        acc = LinComb.zero()
        for sign, node in self.terms:
            value = node.evaluate()
            acc = acc + value if sign == "+" else acc - value
        return acc


# Grammar


def _fatal(s: str, loc: int, msg: str) -> pp.ParseFatalException:
    return pp.ParseFatalException(s, loc, msg)


def _letter(s: str, loc: int, toks: pp.ParseResults) -> Letter:
    k = toks[0]
    d = toks[1] if len(toks) > 1 else 0
    if k < 1:
        raise _fatal(s, loc, f"letter index k must be >= 1, got {k}")
    return Letter(k, d)


def _rational(s: str, loc: int, toks: pp.ParseResults) -> Fraction:
    try:
        return Fraction(toks[0])
    except ZeroDivisionError:
        raise _fatal(s, loc, f"zero denominator in {toks[0]}") from None


def _gsh(s: str, loc: int, toks: pp.ParseResults) -> Gsh:
    ks = tuple(toks)
    if any(k < 1 for k in ks):
        raise _fatal(s, loc, f"gsh indices must be >= 1, got {ks}")
    return Gsh(ks)


def _scaled(s: str, loc: int, toks: pp.ParseResults) -> Expression:
    if toks[0] == 0:
        raise _fatal(s, loc, "a zero scalar multiplies nothing; drop the term")
    return Scaled(toks[0], toks[1])


def _concat(toks: pp.ParseResults) -> Expression:
    parts = tuple(toks)
    return parts[0] if len(parts) == 1 else Concat(parts)


def _product(toks: pp.ParseResults) -> Expression:
    node = toks[0]
    for i in range(1, len(toks), 2):
        node = Product(toks[i], node, toks[i + 1])
    return node


def _sum(toks: pp.ParseResults) -> Expression:
    items = list(toks)
    if isinstance(items[0], str):
        leading = items.pop(0)
    else:
        leading = "+"
    terms = [(leading, items[0])]
    terms += [(items[i], items[i + 1]) for i in range(1, len(items), 2)]
    if len(terms) == 1 and leading == "+":
        return terms[0][1]
    return Sum(tuple(terms))


@lru_cache(maxsize=None)
def _grammar() -> pp.ParserElement:
    lpar, rpar, comma, star = map(pp.Suppress, "(),*")
    integer = pp.Regex(r"\d+").set_parse_action(lambda t: int(t[0]))
    rational = pp.Regex(r"\d+(?:/\d+)?").set_parse_action(_rational)

    letter = (pp.Suppress(pp.Literal("e") + pp.FollowedBy("(")) + lpar + integer + pp.Opt(comma + integer) + rpar)
    letter.set_parse_action(_letter)
    word = pp.OneOrMore(letter).set_parse_action(lambda t: WordLiteral(Word(tuple(t))))

    expr = pp.Forward()
    unary = (pp.Keyword("P") | pp.Keyword("D")) + lpar + expr + rpar
    unary.set_parse_action(lambda t: Apply(t[0], t[1]))
    defect = pp.Suppress(pp.Keyword("ds")) + lpar + expr + comma + expr + rpar
    defect.set_parse_action(lambda t: Ds(t[0], t[1]))
    gsh = pp.Suppress(pp.Keyword("gsh")) + lpar + integer + pp.ZeroOrMore(comma + integer) + rpar
    gsh.set_parse_action(_gsh)
    atom = word | unary | defect | gsh | (lpar + expr + rpar)

    concat = (atom + pp.ZeroOrMore(pp.Opt(star) + atom)).set_parse_action(_concat)
    scaled = (rational + pp.Opt(star) + concat).set_parse_action(_scaled)
    constant = rational.copy().add_parse_action(lambda t: Constant(t[0]))
    term = scaled | constant | concat

    op = pp.MatchFirst([pp.Keyword(name) for name in PRODUCT_OPS])
    product = (term + pp.ZeroOrMore(op + term)).set_parse_action(_product)
    sign = pp.one_of("+ -")
    expr <<= (pp.Opt(sign) + product + pp.ZeroOrMore(sign + product)).set_parse_action(_sum)
    return expr


def parse(text: str) -> Expression:
    """Parse an expression.

    Raises:
        ExpressionSyntaxError: With the 1-based line and column of the failure
    """
    if not text.strip():
        raise ExpressionSyntaxError("empty expression", 1, 1, text)
    try:
        return _grammar().parse_string(text, parse_all=True)[0]
    except pp.ParseBaseException as exc:
        raise ExpressionSyntaxError(exc.msg, exc.lineno, exc.col, text) from None


def render_expression(node: Expression) -> str:
    return node.render()


def eval_expression(node: Expression) -> LinComb:
    """Evaluate to a normalized combination; domain errors come from the products."""
    return node.evaluate()


def evaluate(text: str) -> LinComb:
    return eval_expression(parse(text))
