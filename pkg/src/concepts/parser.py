"""
Concrete syntax for concepts: tokenizer, recursive-descent parser and printer.

Grammar (whitespace-insensitive):

    expr    := unary (("and" unary)* | ("or" unary)*)
    unary   := "top" | "bot" | name | "not" unary
             | "exists" role "." unary | "forall" role "." unary
             | "(" expr ")"

Quantifiers and negation bind tighter than the connectives, and mixing
"and" with "or" at one level needs parentheses. The symbols of the usual
mathematical notation are accepted as aliases of the keywords.
"""

import logging
import re
from dataclasses import dataclass
from typing import List, Optional, Sequence

from .syntax import (
    BOT, TOP, Concept, ConceptKind, Signature, UndeclaredNameError,
    conj, disj, exists, forall, name, neg,
)

logger = logging.getLogger(__name__)


class ConceptSyntaxError(ValueError):
    """Raised when concept text does not follow the grammar."""

    def __init__(self, message: str, position: int, expected: Sequence[str]):
        self.position = position
        self.expected = tuple(expected)
        super().__init__(f"{message} at position {position}; expected {' or '.join(self.expected)}")


ALIASES = {
    "⊤": "top", "⊥": "bot", "¬": "not", "⊓": "and", "⊔": "or", "∃": "exists", "∀": "forall",
}

TOKEN_RE = re.compile(r"\s*(?:([A-Za-z][A-Za-z0-9_]*)|([().])|([⊤⊥¬⊓⊔∃∀]))")


@dataclass(frozen=True)
class Token:
    kind: str   # "word", "punct" or "end"
    value: str
    position: int


def tokenize(text: str) -> List[Token]:
    """
    Split concept text into tokens.

    Raises:
        ConceptSyntaxError: On a character that starts no token.
    """
    tokens: List[Token] = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        match = TOKEN_RE.match(text, pos)
        if match is None:
            raise ConceptSyntaxError(f"Unexpected character {text[pos]!r}", pos, ["a name", "a keyword", "'('"])
        word, punct, symbol = match.groups()
        start = match.start(match.lastindex)
        if word is not None:
            tokens.append(Token("word", word, start))
        elif punct is not None:
            tokens.append(Token("punct", punct, start))
        else:
            tokens.append(Token("word", ALIASES[symbol], start))
        pos = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    """Recursive-descent parser over a token list."""

    KEYWORDS = ("top", "bot", "not", "and", "or", "exists", "forall")

    def __init__(self, text: str, sig: Optional[Signature]):
        self._tokens = tokenize(text)
        self._index = 0
        self._sig = sig

    def peek(self) -> Token:
        return self._tokens[self._index]

    def advance(self) -> Token:
        token = self._tokens[self._index]
        self._index += 1
        return token

    def expect(self, value: str) -> Token:
        token = self.peek()
        if token.value != value or token.kind == "end":
            raise ConceptSyntaxError(f"Unexpected {self._describe(token)}", token.position, [repr(value)])
        return self.advance()

    @staticmethod
    def _describe(token: Token) -> str:
        return "end of input" if token.kind == "end" else repr(token.value)

    def parse(self) -> Concept:
        result = self.expr()
        token = self.peek()
        if token.kind != "end":
            raise ConceptSyntaxError(f"Unexpected {self._describe(token)}", token.position,
                                     ["'and'", "'or'", "end of input"])
        return result

    def expr(self) -> Concept:
        operands = [self.unary()]
        operator = None
        while self.peek().kind == "word" and self.peek().value in ("and", "or"):
            token = self.advance()
            if operator is not None and token.value != operator:
                raise ConceptSyntaxError("Mixed 'and'/'or' without parentheses", token.position,
                                         [repr(operator), "')'"])
            operator = token.value
            operands.append(self.unary())
        if operator == "and":
            return conj(*operands)
        if operator == "or":
            return disj(*operands)
        return operands[0]

    def unary(self) -> Concept:
        token = self.peek()
        if token.kind == "punct" and token.value == "(":
            self.advance()
            inner = self.expr()
            self.expect(")")
            return inner
        if token.kind != "word" or token.value in ("and", "or"):
            raise ConceptSyntaxError(f"Unexpected {self._describe(token)}", token.position,
                                     ["'top'", "'bot'", "a concept name", "'not'", "'exists'", "'forall'", "'('"])
        self.advance()
        if token.value == "top":
            return TOP
        if token.value == "bot":
            return BOT
        if token.value == "not":
            return neg(self.unary())
        if token.value in ("exists", "forall"):
            role = self.role()
            self.expect(".")
            filler = self.unary()
            return exists(role, filler) if token.value == "exists" else forall(role, filler)
        self._declared(token, concept=True)
        return name(token.value)

    def role(self) -> str:
        token = self.peek()
        if token.kind != "word" or token.value in self.KEYWORDS:
            raise ConceptSyntaxError(f"Unexpected {self._describe(token)}", token.position, ["a role name"])
        self.advance()
        self._declared(token, concept=False)
        return token.value

    def _declared(self, token: Token, concept: bool) -> None:
        if self._sig is None:
            return
        names = self._sig.concept_names if concept else self._sig.role_names
        if token.value not in names:
            kind = "concept" if concept else "role"
            raise UndeclaredNameError(f"Undeclared {kind} name {token.value!r} at position {token.position}")


def parse_concept(text: str, sig: Optional[Signature] = None) -> Concept:
    """
    Parse concept text into a normalized concept.

    Args:
        text: Concept in the ASCII or symbolic surface syntax.
        sig: Signature the names must come from. None skips the check.

    Returns:
        The normalized concept.

    Raises:
        ConceptSyntaxError: If the text does not follow the grammar.
        UndeclaredNameError: If a name is not declared in sig.
    """
    concept = _Parser(text, sig).parse()
    logger.debug(f"Parsed {text!r} as {concept.text}")
    return concept


_UNICODE = {
    ConceptKind.AND: " ⊓ ",
    ConceptKind.OR: " ⊔ ",
}


def print_concept(c: Concept, unicode: bool = False) -> str:
    """
    Canonical, fully parenthesized text of a concept.

    Args:
        c: Concept to print.
        unicode: Use the mathematical symbols instead of ASCII keywords.
    """
    if not unicode:
        return c.text
    kind = c.kind
    if kind is ConceptKind.TOP:
        return "⊤"
    if kind is ConceptKind.BOT:
        return "⊥"
    if kind is ConceptKind.NAME:
        return c.name
    if kind is ConceptKind.NOT:
        return f"(¬{print_concept(c.child, True)})"
    if kind in _UNICODE:
        return "(" + _UNICODE[kind].join(print_concept(ch, True) for ch in c.children) + ")"
    quantifier = "∃" if kind is ConceptKind.EXISTS else "∀"
    return f"({quantifier}{c.name}.{print_concept(c.child, True)})"
