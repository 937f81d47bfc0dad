"""
:module BaseSequence: Base sequences Q = (q_k) of a Cantor series, their prefix
products and the textual Q-spec mini-language.

Mini-language (ASCII, case-sensitive)::

    spec := "const:" INT | "cycle:" INT ("," INT)* | "list:" INT ("," INT)* ";then;" spec | "rule:succ"
    INT  := decimal integer >= 2

Example: ``list:10,10;then;cycle:2,3``.
"""

import logging
import threading
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, List, Optional, Tuple, Union

from cantorkit.Exceptions import BaseSpecSyntaxError

logger = logging.getLogger(__name__)

# Named rules of the ``rule:`` kind. Unknown names are syntax errors.
RULES: Dict[str, Callable[[int], int]] = {
    "succ": lambda k: k + 1,
}


class BaseSpecKind(Enum):
    CONSTANT = "const"
    CYCLE = "cycle"
    LIST_THEN = "list"
    RULE = "rule"


@dataclass(frozen=True)
class BaseSpec:
    """
    A rule producing the base q_k >= 2 for every index k >= 1.

    - ``CONSTANT``: ``values == (q,)``
    - ``CYCLE``: ``values`` repeated with period ``len(values)``
    - ``LIST_THEN``: ``values`` first, then the continuation spec ``then``
    - ``RULE``: the named rule ``rule`` (see :data:`RULES`)
    """

    kind: BaseSpecKind
    values: Tuple[int, ...] = ()
    then: Optional["BaseSpec"] = None
    rule: Optional[str] = None

    def __post_init__(self):
        if self.kind is BaseSpecKind.RULE:
            if self.rule not in RULES:
                raise ValueError(f"Unknown base rule '{self.rule}'")
            return
        if len(self.values) == 0:
            raise ValueError(f"A {self.kind.value} spec needs at least one base")
        if self.kind is BaseSpecKind.CONSTANT and len(self.values) != 1:
            raise ValueError("A const spec holds exactly one base")
        for value in self.values:
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError(f"Bases are expected to be int, not {type(value)}")
            if value < 2:
                raise ValueError(f"Base {value} is below 2")
        if self.kind is BaseSpecKind.LIST_THEN:
            if not isinstance(self.then, BaseSpec):
                raise ValueError("A list spec needs a continuation spec")
            # nested lists merge, so the continuation is never a list
            if self.then.kind is BaseSpecKind.LIST_THEN:
                object.__setattr__(self, "values", tuple(self.values) + self.then.values)
                object.__setattr__(self, "then", self.then.then)

    def base(self, k: int) -> int:
        """q_k for k >= 1. Pure in (spec, k)."""
        if k < 1:
            raise ValueError(f"Base index starts at 1, got {k}")
        if self.kind is BaseSpecKind.CONSTANT:
            return self.values[0]
        if self.kind is BaseSpecKind.CYCLE:
            return self.values[(k - 1) % len(self.values)]
        if self.kind is BaseSpecKind.LIST_THEN:
            if k <= len(self.values):
                return self.values[k - 1]
            return self.then.base(k - len(self.values))
        return RULES[self.rule](k)

    def __str__(self) -> str:
        if self.kind is BaseSpecKind.RULE:
            return f"rule:{self.rule}"
        listed = ",".join(str(value) for value in self.values)
        if self.kind is BaseSpecKind.LIST_THEN:
            return f"list:{listed};then;{self.then}"
        return f"{self.kind.value}:{listed}"


class _SpecParser:
    """Recursive-descent parser of the Q-spec mini-language."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, message: str, position: Optional[int] = None):
        raise BaseSpecSyntaxError(
            message, self.pos if position is None else position, self.text
        )

    def expect(self, literal: str):
        if not self.text.startswith(literal, self.pos):
            self.fail(f"expected '{literal}'")
        self.pos += len(literal)

    def integer(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and "0" <= self.text[self.pos] <= "9":
            self.pos += 1
        if start == self.pos:
            self.fail("expected a decimal integer")
        value = int(self.text[start : self.pos])
        if value < 2:
            self.fail(f"base {value} is below 2", start)
        return value

    def integer_list(self) -> Tuple[int, ...]:
        values = [self.integer()]
        while self.text.startswith(",", self.pos):
            self.pos += 1
            values.append(self.integer())
        return tuple(values)

    def spec(self) -> BaseSpec:
        # a chain of list segments reads as one list before its continuation
        listed: List[int] = []
        while self.text.startswith("list:", self.pos):
            self.pos += len("list:")
            listed.extend(self.integer_list())
            self.expect(";then;")
        then = self.periodic_spec()
        if listed:
            return BaseSpec(BaseSpecKind.LIST_THEN, tuple(listed), then=then)
        return then

    def periodic_spec(self) -> BaseSpec:
        if self.text.startswith("const:", self.pos):
            self.pos += len("const:")
            return BaseSpec(BaseSpecKind.CONSTANT, (self.integer(),))
        if self.text.startswith("cycle:", self.pos):
            self.pos += len("cycle:")
            return BaseSpec(BaseSpecKind.CYCLE, self.integer_list())
        if self.text.startswith("rule:", self.pos):
            self.pos += len("rule:")
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isalnum():
                self.pos += 1
            name = self.text[start : self.pos]
            if name not in RULES:
                self.fail(f"unknown rule '{name}'", start)
            return BaseSpec(BaseSpecKind.RULE, rule=name)
        self.fail("expected one of 'const:', 'cycle:', 'list:', 'rule:'")

    def parse(self) -> BaseSpec:
        spec = self.spec()
        if self.pos != len(self.text):
            self.fail("unexpected trailing characters")
        return spec


def parse_base_spec(text: str) -> BaseSpec:
    """
    Parse a Q-spec text into a :class:`BaseSpec`.

    :param text: The Q-spec, e.g. ``"cycle:2,3"``.
    :raises BaseSpecSyntaxError: with the 0-based position of the first offending character.
    """
    if not isinstance(text, str):
        raise TypeError(f"Q-spec is expected to be a str, not {type(text)}")
    return _SpecParser(text).parse()


class BaseSequence:
    """
    A base sequence Q with a lazily grown cache of (q_k, P_k).

    ``P_0 = 1`` and ``P_k = P_{k-1} * q_k``. The cache grows on demand, so no
    operation fails because of an unresolved horizon. Extension is guarded by a
    lock; reads of already cached entries need none.
    """

    def __init__(self, spec: Union[BaseSpec, str], offset: int = 0):
        """
        :param spec: A BaseSpec or a Q-spec text.
        :param offset: Number of leading bases to skip, used by :meth:`shifted`.
        """
        if isinstance(spec, str):
            spec = parse_base_spec(spec)
        if not isinstance(spec, BaseSpec):
            raise TypeError(
                f"BaseSequence: `spec` is expected to be a BaseSpec or str, not {type(spec)}"
            )
        if offset < 0:
            raise ValueError(f"BaseSequence: offset must be non-negative, got {offset}")
        self.__spec = spec
        self.__offset = offset
        self.__bases: List[int] = [1]
        self.__products: List[int] = [1]
        self.__lock = threading.Lock()

    @property
    def spec(self) -> BaseSpec:
        return self.__spec

    @property
    def offset(self) -> int:
        return self.__offset

    @property
    def horizon(self) -> int:
        """The largest k whose (q_k, P_k) is cached."""
        return len(self.__products) - 1

    def __extend(self, k: int):
        with self.__lock:
            start = len(self.__products)
            while len(self.__products) <= k:
                index = len(self.__products)
                base = self.__spec.base(index + self.__offset)
                self.__bases.append(base)
                self.__products.append(self.__products[-1] * base)
            if len(self.__products) > start:
                logger.debug("Q=%s cache grown to horizon %d", self, k)

    def q_at(self, k: int) -> int:
        """The base q_k, k >= 1."""
        if k < 1:
            raise ValueError(f"q_at: index starts at 1, got {k}")
        if k >= len(self.__bases):
            self.__extend(k)
        return self.__bases[k]

    def product_prefix(self, k: int) -> int:
        """The prefix product P_k = q_1 q_2 ... q_k, with P_0 = 1."""
        if k < 0:
            raise ValueError(f"product_prefix: index must be non-negative, got {k}")
        if k >= len(self.__products):
            self.__extend(k)
        return self.__products[k]

    def shifted(self, n: int) -> "BaseSequence":
        """The sequence (q_{n+1}, q_{n+2}, ...), the base system of the shifted digits."""
        return BaseSequence(self.__spec, self.__offset + n)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BaseSequence):
            return NotImplemented
        return self.spec == other.spec and self.offset == other.offset

    def __hash__(self) -> int:
        return hash((self.__spec, self.__offset))

    def __getstate__(self):
        return {"spec": self.__spec, "offset": self.__offset}

    def __setstate__(self, state):
        self.__init__(state["spec"], state["offset"])

    def __str__(self) -> str:
        if self.__offset == 0:
            return str(self.__spec)
        return f"{self.__spec}>>{self.__offset}"

    def __repr__(self) -> str:
        return f"BaseSequence('{self}')"
