"""
Word Parser
Single-pass recursive-descent parser for the word grammar.

    word  := term (('*')? term)*
    term  := atom ('^' int)?
    atom  := 'x' posint | '[' word (',' word)+ ']' | '(' word ')'
    int   := ('-')? digits

Whitespace is ignored. '1' (or an empty string) denotes the identity.
Brackets with more than two entries are left-normed.
"""
from typing import List, Optional

from .errors import GeneratorRangeError, WordSyntaxError
from .words import (
    CommutatorExpr,
    Leaf,
    Word,
    bracket,
    check_expr_generators,
    commutator_word,
    concat,
)


class _Cursor:
    """Character cursor over the input with whitespace skipping"""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.skip_space()

    def skip_space(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> Optional[str]:
        return self.text[self.pos] if self.pos < len(self.text) else None

    def take(self, expected: str) -> None:
        if self.peek() != expected:
            found = self.peek()
            raise WordSyntaxError(
                f"Expected '{expected}' but found {repr(found) if found else 'end of input'}",
                self.pos, self.text
            )
        self.pos += 1
        self.skip_space()

    def digits(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise WordSyntaxError("Expected a number", start, self.text)
        value = int(self.text[start:self.pos])
        self.skip_space()
        return value

    def at_end(self) -> bool:
        return self.pos >= len(self.text)

    def fail(self, message: str) -> None:
        raise WordSyntaxError(message, self.pos, self.text)


class WordParser:
    """Parser producing freely reduced words; generator indices checked against q"""

    TERM_START = ('x', '[', '(')

    def __init__(self, q: Optional[int] = None):
        self.q = q

    def parse(self, text: str) -> Word:
        cursor = _Cursor(text)
        if cursor.at_end():
            return Word.identity()
        if cursor.peek() == '1':
            cursor.take('1')
            if not cursor.at_end():
                cursor.fail("Unexpected input after identity '1'")
            return Word.identity()
        word = self._word(cursor)
        if not cursor.at_end():
            cursor.fail(f"Unexpected character {repr(cursor.peek())}")
        return word

    def _word(self, cursor: _Cursor) -> Word:
        parts = [self._term(cursor)]
        while True:
            if cursor.peek() == '*':
                cursor.take('*')
                parts.append(self._term(cursor))
            elif cursor.peek() in self.TERM_START:
                parts.append(self._term(cursor))
            else:
                break
        return concat(*parts)

    def _term(self, cursor: _Cursor) -> Word:
        atom = self._atom(cursor)
        if cursor.peek() == '^':
            cursor.take('^')
            sign = 1
            if cursor.peek() == '-':
                cursor.take('-')
                sign = -1
            return atom ** (sign * cursor.digits())
        return atom

    def _atom(self, cursor: _Cursor) -> Word:
        char = cursor.peek()
        if char == 'x':
            position = cursor.pos
            cursor.take('x')
            index = cursor.digits()
            self._check_index(index, position, cursor.text)
            return Word.generator(index)
        if char == '[':
            cursor.take('[')
            entries = [self._word(cursor)]
            while cursor.peek() == ',':
                cursor.take(',')
                entries.append(self._word(cursor))
            if len(entries) < 2:
                cursor.fail("A bracket needs at least two entries")
            cursor.take(']')
            result = entries[0]
            for entry in entries[1:]:
                result = commutator_word(result, entry)
            return result
        if char == '(':
            cursor.take('(')
            inner = self._word(cursor)
            cursor.take(')')
            return inner
        cursor.fail(f"Expected 'x', '[' or '(' but found {repr(char) if char else 'end of input'}")

    def _check_index(self, index: int, position: int, text: str) -> None:
        if index < 1 or (self.q is not None and index > self.q):
            error = GeneratorRangeError(index, self.q)
            error.position = position
            raise error

    # ============ Commutator expressions ============

    def parse_expr(self, text: str) -> CommutatorExpr:
        """Parse bracket notation such as [[x2,x1],x2] into a CommutatorExpr"""
        cursor = _Cursor(text)
        expr = self._expr(cursor)
        if not cursor.at_end():
            cursor.fail(f"Unexpected character {repr(cursor.peek())}")
        check_expr_generators(expr, self.q)
        return expr

    def _expr(self, cursor: _Cursor) -> CommutatorExpr:
        if cursor.peek() == 'x':
            cursor.take('x')
            return Leaf(cursor.digits())
        if cursor.peek() == '[':
            cursor.take('[')
            entries: List[CommutatorExpr] = [self._expr(cursor)]
            while cursor.peek() == ',':
                cursor.take(',')
                entries.append(self._expr(cursor))
            if len(entries) < 2:
                cursor.fail("A bracket needs at least two entries")
            cursor.take(']')
            return bracket(*entries)
        cursor.fail("Expected 'x' or '['")


def parse_word(text: str, q: Optional[int] = None) -> Word:
    """
    Parse text into the freely reduced Word it denotes.

    Args:
        text: Word in the grammar above
        q: Generator count; indices above q are rejected

    Returns:
        Freely reduced Word
    """
    return WordParser(q).parse(text)


def parse_commutator(text: str, q: Optional[int] = None) -> CommutatorExpr:
    return WordParser(q).parse_expr(text)
