"""Transition-bias rules: hard constraints over adjacent tag pairs.

A rules file holds one directive per line, ``FORBID <pat> <pat>`` or
``REQUIRE <pat> <pat>``.  A forbid rule bans every adjacent pair whose
tags match its two patterns; a require rule demands that whenever the
left pattern matches a tag, its successor matches the right pattern
(the sentence-final position is exempt because it has no successor).

Constraints intersect, so evaluation is order independent and adding a
rule can only shrink the allowed relation.  The rule set compiles to a
forbidden-pair table over the registry for constant-time queries.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .errors import BadPattern, RuleSyntaxError
from .tagset import Tag, load_registry

FORBID = "forbid"
REQUIRE = "require"

# Literal characters a pattern may use: the alphabet of registry codes.
# "?" is the single-character wildcard, a trailing "*" matches any suffix.
_LITERAL_CHARS = frozenset("ABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789" + '!"(),-.:;')


@dataclass(frozen=True)
class TagPattern:
    """Wildcard pattern over tag codes."""

    pattern: str

    def __post_init__(self):
        if not self.pattern:
            raise BadPattern(self.pattern, "empty pattern")
        body = self.pattern[:-1] if self.pattern.endswith("*") else self.pattern
        if "*" in body:
            raise BadPattern(self.pattern, "'*' is only allowed as the final character")
        bad = [c for c in body if c != "?" and c not in _LITERAL_CHARS]
        if bad:
            raise BadPattern(self.pattern, f"invalid character {bad[0]!r}")

    def matches(self, code: str) -> bool:
        pattern = self.pattern
        if pattern.endswith("*"):
            prefix = pattern[:-1]
            if len(code) < len(prefix):
                return False
            code = code[: len(prefix)]
            pattern = prefix
        elif len(code) != len(pattern):
            return False
        return all(p == "?" or p == c for p, c in zip(pattern, code))


@dataclass(frozen=True)
class BiasRule:
    kind: str  # FORBID or REQUIRE
    left: TagPattern
    right: TagPattern
    rule_id: int  # 1-based source line number

    def violates(self, left_code: str, right_code: str) -> bool:
        """True when this single rule rejects the adjacent pair."""
        if self.kind == FORBID:
            return self.left.matches(left_code) and self.right.matches(right_code)
        return self.left.matches(left_code) and not self.right.matches(right_code)


class RuleSet:
    """Immutable ordered collection of bias rules."""

    def __init__(self, rules: tuple[BiasRule, ...]):
        self.rules = tuple(rules)
        self._forbidden: dict[str, frozenset[str]] | None = None

    def __len__(self) -> int:
        return len(self.rules)

    def _compiled(self) -> dict[str, frozenset[str]]:
        """Forbidden-pair table over the full registry (built lazily)."""
        if self._forbidden is None:
            codes = load_registry().codes()
            banned: dict[str, set[str]] = {}
            for rule in self.rules:
                lefts = [c for c in codes if rule.left.matches(c)]
                if not lefts:
                    continue
                if rule.kind == FORBID:
                    rights = {c for c in codes if rule.right.matches(c)}
                else:
                    rights = {c for c in codes if not rule.right.matches(c)}
                if not rights:
                    continue
                for left_code in lefts:
                    banned.setdefault(left_code, set()).update(rights)
            self._forbidden = {k: frozenset(v) for k, v in banned.items()}
        return self._forbidden

    def allowed(self, t1: Tag, t2: Tag) -> bool:
        """May t2 immediately follow t1?"""
        banned = self._compiled().get(t1.code)
        return banned is None or t2.code not in banned

    def first_violation(self, t1: Tag, t2: Tag) -> BiasRule | None:
        """The first rule (in file order) rejecting the pair, if any."""
        for rule in self.rules:
            if rule.violates(t1.code, t2.code):
                return rule
        return None

    def validate_sequence(self, tags: list[Tag]) -> list[tuple[int, int]]:
        """Violations as (pair index, rule id); empty list means valid."""
        violations = []
        for i in range(len(tags) - 1):
            rule = self.first_violation(tags[i], tags[i + 1])
            if rule is not None:
                violations.append((i, rule.rule_id))
        return violations


EMPTY_RULESET = RuleSet(())


def parse_rules(text: str) -> RuleSet:
    """Parse a rules file body.

    Blank lines and lines starting with ``#`` are ignored.  Raises
    RuleSyntaxError for anything that is not a two-pattern FORBID or
    REQUIRE directive and BadPattern for malformed patterns.
    """
    rules = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 3:
            raise RuleSyntaxError(line_no, "expected 'FORBID|REQUIRE <pattern> <pattern>'")
        directive, left, right = fields
        if directive == "FORBID":
            kind = FORBID
        elif directive == "REQUIRE":
            kind = REQUIRE
        else:
            raise RuleSyntaxError(line_no, f"unknown directive {directive!r}")
        try:
            rule = BiasRule(kind, TagPattern(left), TagPattern(right), rule_id=line_no)
        except BadPattern as exc:
            raise BadPattern(exc.pattern, exc.message, line=line_no) from None
        rules.append(rule)
    return RuleSet(tuple(rules))


def load_rules(path: str | Path) -> RuleSet:
    return parse_rules(Path(path).read_text(encoding="utf-8"))


def allowed(ruleset: RuleSet, t1: Tag, t2: Tag) -> bool:
    return ruleset.allowed(t1, t2)


def validate_sequence(ruleset: RuleSet, tags: list[Tag]) -> list[tuple[int, int]]:
    return ruleset.validate_sequence(tags)
