"""Bias rule parsing, matching, and compiled-table equivalence."""

import random

import pytest

from spantag.bias import (
    EMPTY_RULESET,
    TagPattern,
    allowed,
    parse_rules,
    validate_sequence,
)
from spantag.errors import BadPattern, RuleSyntaxError
from spantag.tagset import load_registry, parse_tag


def tags(*codes):
    return [parse_tag(c) for c in codes]


def test_parse_forbid():
    rs = parse_rules("FORBID ARTDFS NCMP\n")
    assert len(rs) == 1
    assert rs.rules[0].kind == "forbid"
    assert rs.rules[0].rule_id == 1


def test_parse_require():
    rs = parse_rules("REQUIRE PPOSPS NC*\n")
    assert rs.rules[0].kind == "require"


def test_parse_comments_blanks_and_line_ids():
    rs = parse_rules("# heading\n\nFORBID A* B*\n# mid\nREQUIRE C* D*\n")
    assert [r.rule_id for r in rs.rules] == [3, 5]


def test_parse_bad_directive():
    with pytest.raises(RuleSyntaxError) as err:
        parse_rules("BLOCK ARTDFS NCMP\n")
    assert err.value.line == 1


def test_parse_wrong_arity():
    with pytest.raises(RuleSyntaxError):
        parse_rules("FORBID ARTDFS\n")
    with pytest.raises(RuleSyntaxError):
        parse_rules("FORBID A B C\n")


def test_interior_star_rejected():
    with pytest.raises(BadPattern) as err:
        parse_rules("FORBID A*B C\n")
    assert err.value.line == 1
    assert err.value.pattern == "A*B"


def test_lowercase_pattern_rejected():
    with pytest.raises(BadPattern):
        TagPattern("ncfs")


def test_pattern_matching():
    assert TagPattern("ARTD?S").matches("ARTDFS")
    assert TagPattern("ARTD?S").matches("ARTDMS")
    assert not TagPattern("ARTD?S").matches("ARTDFP")
    assert TagPattern("NC*").matches("NCFS")
    assert TagPattern("NC*").matches("NCMP")
    assert not TagPattern("NC*").matches("ADJGFS")
    assert TagPattern("NC*").matches("NC") is True  # empty suffix allowed
    assert TagPattern("*").matches(",")
    assert TagPattern("...").matches("...")
    assert not TagPattern("NCFS").matches("NCF")


def test_allowed_forbid():
    rs = parse_rules("FORBID ARTDFS NCMP\n")
    assert allowed(rs, parse_tag("ARTDFS"), parse_tag("NCMP")) is False
    assert allowed(rs, parse_tag("ARTDFS"), parse_tag("NCFS")) is True
    assert allowed(rs, parse_tag("NCMP"), parse_tag("ARTDFS")) is True  # ordered


def test_allowed_require():
    rs = parse_rules("REQUIRE PPOSPS NC*\n")
    assert allowed(rs, parse_tag("PPOSPS"), parse_tag("NCFS")) is True
    assert allowed(rs, parse_tag("PPOSPS"), parse_tag("VLINF")) is False
    assert allowed(rs, parse_tag("NCFS"), parse_tag("VLINF")) is True


def test_empty_ruleset_allows_everything():
    assert allowed(EMPTY_RULESET, parse_tag("ARTDFS"), parse_tag("NCMP"))


def test_validate_sequence_empty():
    rs = parse_rules("FORBID ARTDFS NCMP\n")
    assert validate_sequence(rs, []) == []
    assert validate_sequence(rs, tags("ARTDFS")) == []


def test_validate_sequence_violation():
    rs = parse_rules("FORBID ARTDFS NCMP\n")
    assert validate_sequence(rs, tags("ARTDFS", "NCMP")) == [(0, 1)]
    assert validate_sequence(rs, tags("NCFS", "ARTDFS", "NCMP")) == [(1, 1)]
    assert validate_sequence(rs, tags("ARTDFS", "NCFS")) == []


def test_validate_sequence_reports_first_matching_rule():
    rs = parse_rules("FORBID ARTD?S NCMP\nFORBID ARTDFS NC*\n")
    assert validate_sequence(rs, tags("ARTDFS", "NCMP")) == [(0, 1)]


def test_require_exempts_sequence_end():
    rs = parse_rules("REQUIRE PPOSPS NC*\n")
    # final position has no successor to constrain
    assert validate_sequence(rs, tags("NCFS", "PPOSPS")) == []


# ------------------------------------------------ naive-oracle equivalence

def naive_matches(pattern, code):
    """Independent re-implementation of pattern semantics."""
    if pattern.endswith("*"):
        prefix = pattern[:-1]
        if len(code) < len(prefix):
            return False
        pairs = zip(prefix, code[: len(prefix)])
    else:
        if len(pattern) != len(code):
            return False
        pairs = zip(pattern, code)
    return all(p == "?" or p == c for p, c in pairs)


def naive_allowed(rules, c1, c2):
    for kind, left, right in rules:
        if kind == "FORBID" and naive_matches(left, c1) and naive_matches(right, c2):
            return False
        if kind == "REQUIRE" and naive_matches(left, c1) and not naive_matches(right, c2):
            return False
    return True


def random_pattern(rng, codes):
    base = rng.choice(codes)
    kind = rng.random()
    if kind < 0.35 and len(base) > 1:
        return base[: rng.randrange(1, len(base))] + "*"
    if kind < 0.7:
        chars = list(base)
        chars[rng.randrange(len(chars))] = "?"
        return "".join(chars)
    return base


def random_rule_lines(rng, codes, n_rules):
    lines = []
    for _ in range(n_rules):
        directive = rng.choice(["FORBID", "REQUIRE"])
        lines.append(
            f"{directive} {random_pattern(rng, codes)} {random_pattern(rng, codes)}"
        )
    return lines


def test_compiled_table_equals_naive_full_registry():
    registry = load_registry()
    codes = registry.codes()
    rng = random.Random(12)
    for _round in range(2):
        lines = random_rule_lines(rng, codes, 3)
        rs = parse_rules("\n".join(lines))
        triples = [(r.kind.upper(), r.left.pattern, r.right.pattern) for r in rs.rules]
        table = rs._compiled()
        for c1 in codes:
            banned = table.get(c1, frozenset())
            for c2 in codes:
                assert (c2 not in banned) == naive_allowed(triples, c1, c2)


def test_allowed_equals_naive_random_pairs():
    registry = load_registry()
    codes = registry.codes()
    rng = random.Random(13)
    for _round in range(25):
        lines = random_rule_lines(rng, codes, rng.randrange(1, 6))
        rs = parse_rules("\n".join(lines))
        triples = [(r.kind.upper(), r.left.pattern, r.right.pattern) for r in rs.rules]
        for _ in range(300):
            c1, c2 = rng.choice(codes), rng.choice(codes)
            assert rs.allowed(parse_tag(c1), parse_tag(c2)) == naive_allowed(triples, c1, c2)


def test_monotonicity_adding_rules():
    """A forbidden pair never becomes allowed when rules are added."""
    registry = load_registry()
    codes = registry.codes()
    rng = random.Random(14)
    for _round in range(10):
        lines = random_rule_lines(rng, codes, 4)
        small = parse_rules("\n".join(lines[:2]))
        big = parse_rules("\n".join(lines))
        for _ in range(200):
            t1, t2 = parse_tag(rng.choice(codes)), parse_tag(rng.choice(codes))
            if not small.allowed(t1, t2):
                assert not big.allowed(t1, t2)


def test_validation_agrees_with_allowed():
    rng = random.Random(15)
    codes = load_registry().codes()
    for _round in range(20):
        rs = parse_rules("\n".join(random_rule_lines(rng, codes, 3)))
        seq = tags(*(rng.choice(codes) for _ in range(rng.randrange(0, 7))))
        violations = {i for i, _rid in validate_sequence(rs, seq)}
        for i in range(max(0, len(seq) - 1)):
            assert (i in violations) == (not rs.allowed(seq[i], seq[i + 1]))
