"""Acceptance suite: one test per criterion, run at desk scale.

Each test prints a single ``[acceptance] criterion N (...): PASS/FAIL``
line (visible with ``pytest -s``); the test outcome carries the same
verdict for plain runs.
"""

import itertools
import math
import random
from contextlib import contextmanager

import pytest

from spantag.bias import parse_rules
from spantag.cli import main
from spantag.corpus_io import (
    VerticalDocument,
    evaluate,
    format_vertical,
    parse_vertical,
    read_vertical,
    write_vertical,
)
from spantag.errors import NoValidPath
from spantag.lexicon import AmbiguityClass, ambiguity_report, parse_lexicon, seed_lexicon
from spantag.tagger import (
    END,
    START,
    UNKNOWN,
    HmmModel,
    emission_scores,
    tag_text,
    train,
    viterbi_decode,
)
from spantag.tagset import REGISTRY_SIZE, compose, decompose, load_registry, parse_tag
from spantag.tokenizer import (
    KIND_ABBREVIATION,
    KIND_NUMBER,
    KIND_PUNCTUATION,
    KIND_WORD,
    Token,
    sentence_split,
    split_enclitics,
    split_portmanteau,
    tokenize,
)

from conftest import make_token, sentence


@contextmanager
def criterion(number, label):
    try:
        yield
    except BaseException:
        print(f"[acceptance] criterion {number} ({label}): FAIL")
        raise
    print(f"[acceptance] criterion {number} ({label}): PASS")


# ---------------------------------------------------------------------- 1

def test_criterion_1_registry_completeness():
    with criterion(1, "registry completeness"):
        registry = load_registry()
        assert len(registry) == REGISTRY_SIZE == 492
        for code in ("IQUEST", "VHPI3E", "PAL", "PDEL", "SE", "CQUE", "QUDF",
                     "CARDGU", "NPAXX", "VLPPFP", "PPXT2S", "UMFX"):
            assert code in registry
        failures = [
            e.tag.code for e in registry if compose(decompose(e.tag)) != e.tag
        ]
        assert failures == []


# ---------------------------------------------------------------------- 2

def test_criterion_2_codec_feature_checks():
    with criterion(2, "codec feature checks"):
        b = decompose(parse_tag("VLPI3S"))
        assert b.category == "verb"
        assert b.verb_class == "lexical"
        assert b.mood == "indicative"
        assert b.tense == "present"
        assert b.person == "third"
        assert b.number == "singular"

        b = decompose(parse_tag("DMRPNS"))
        assert b.category == "demonstrative"
        assert b.pronominal_function == "pronominal"
        assert b.gender == "neuter"
        assert b.number == "singular"
        assert b.deixis == "remote"

        b = decompose(parse_tag("PREPN"))
        assert b.category == "preposition"
        assert b.polarity == "negative"

        b = decompose(parse_tag("VHPI3E"))
        assert b.existential is True
        assert b.verb_class == "haber"
        assert b.tense == "present"
        assert b.mood == "indicative"
        assert b.person == "third"
        assert b.number == "singular"


# ---------------------------------------------------------------------- 3

def _reconstruct(text, tokens):
    data = text.encode("utf-8")
    pos = 0
    pieces = []
    for tok in tokens:
        start, end = tok.span
        assert pos <= start <= end
        gap = data[pos:start].decode("utf-8")
        assert gap.strip() == ""
        assert data[start:end].decode("utf-8") == tok.surface
        pieces += [gap, tok.surface]
        pos = end
    tail = data[pos:].decode("utf-8")
    assert tail.strip() == ""
    return "".join(pieces) + tail


def test_criterion_3_tokenizer():
    with criterion(3, "tokenizer fixtures, fuzz and splitting"):
        tokens = tokenize("¿Dónde está Juan?")
        assert [t.surface for t in tokens] == ["¿", "Dónde", "está", "Juan", "?"]
        assert tokens[0].kind == KIND_PUNCTUATION

        tokens = tokenize("Espera... ¡ya!")
        assert "..." in [t.surface for t in tokens]

        tokens = tokenize("40-50 hectáreas")
        assert tokens[0].surface == "40-50" and tokens[0].kind == KIND_NUMBER

        tokens = tokenize("Sr. García vino.")
        assert tokens[0].surface == "Sr." and tokens[0].kind == KIND_ABBREVIATION
        assert len(sentence_split(tokens)) == 1

        rng = random.Random(424242)
        pool = (
            "abcdefgABCDEFG áéíóúüñÑÁÉÍÓÚ 0123456789 .,;:!?¿¡\"()-…«»“”'\t\n"
            "€%+=_/\\[]{}@#£§ 汉字ひらがλ🙂🚀"
        )
        for _ in range(1000):
            text = "".join(rng.choice(pool) for _ in range(rng.randrange(0, 70)))
            assert _reconstruct(text, tokenize(text)) == text

        al = split_portmanteau(make_token("al", KIND_WORD))
        assert sorted(t.code for t in al.parts[0][1]) == ["CSUBI", "PAL"]
        del_ = split_portmanteau(make_token("del", KIND_WORD))
        assert sorted(t.code for t in del_.parts[0][1]) == ["PDEL"]

        lex = parse_lexicon("di\tVLPM2S\ncomer\tVLINF\n")
        dimelo = split_enclitics(make_token("dímelo", KIND_WORD), lex)
        assert [(s, sorted(t.code for t in tags)) for s, tags in dimelo.parts] == [
            ("di", ["VLPM2S"]), ("me", ["PPC1S"]), ("lo", ["PPO3XS"]),
        ]
        comerse = split_enclitics(make_token("comerse", KIND_WORD), lex)
        assert [(s, sorted(t.code for t in tags)) for s, tags in comerse.parts] == [
            ("comer", ["VLINF"]), ("se", ["SE"]),
        ]
        assert split_enclitics(make_token("mesa", KIND_WORD), lex) is None
        assert split_enclitics(make_token("mesa", KIND_WORD), seed_lexicon()) is None


# ---------------------------------------------------------------------- 4

TAG_POOL = ("ARTDFS", "NCFS", "NCMP", "ADJGFS", "VLPI3S", "PREP", "CC", "ADVN")
VOCAB_POOL = ("la", "mesa", "casa", "come", "y", "de", "bien", "rara")


def _random_model(rng):
    registry = load_registry()
    outcomes = list(registry.codes()) + [END]
    transitions = {}
    for context in (START,) + TAG_POOL:
        weights = [rng.uniform(0.05, 1.0) for _ in outcomes]
        total = math.fsum(weights)
        transitions[context] = {o: w / total for o, w in zip(outcomes, weights)}
    emit_outcomes = sorted(VOCAB_POOL) + [UNKNOWN]
    emissions = {}
    for code in TAG_POOL:
        weights = [rng.uniform(0.05, 1.0) for _ in emit_outcomes]
        total = math.fsum(weights)
        emissions[code] = {o: w / total for o, w in zip(emit_outcomes, weights)}
    return HmmModel(
        transitions=transitions,
        emissions=emissions,
        tag_counts={code: rng.randrange(1, 9) for code in TAG_POOL},
        vocab=frozenset(VOCAB_POOL),
        kt=0.5,
        ke=0.1,
    )


def _random_sentence(rng):
    sent = []
    for i in range(rng.randrange(1, 7)):
        surface = (
            rng.choice(VOCAB_POOL) if rng.random() < 0.75
            else f"inventada{rng.randrange(50)}"
        )
        codes = rng.sample(TAG_POOL, rng.randrange(1, 5))
        sent.append((
            Token(surface, (i, i + 1), KIND_WORD),
            AmbiguityClass(frozenset(parse_tag(c) for c in codes)),
        ))
    return sent


def _random_ruleset(rng):
    lines = []
    for _ in range(rng.randrange(1, 4)):
        directive = rng.choice(["FORBID", "REQUIRE"])
        left, right = rng.choice(TAG_POOL), rng.choice(TAG_POOL)
        if rng.random() < 0.3:
            left = left[: rng.randrange(1, len(left))] + "*"
        if rng.random() < 0.3:
            right = right[: rng.randrange(1, len(right))] + "*"
        lines.append(f"{directive} {left} {right}")
    return parse_rules("\n".join(lines))


def _brute_force(model, ruleset, sent):
    emits = emission_scores(model, sent)
    registry = load_registry()
    layers = [cls.sorted_tags() for _tok, cls in sent]
    best = None
    for combo in itertools.product(*layers):
        if ruleset is not None and any(
            not ruleset.allowed(a, b) for a, b in zip(combo, combo[1:])
        ):
            continue
        score = model.transition_logp(START, combo[0].code) + emits[0][combo[0].code]
        for i in range(1, len(combo)):
            score = score + model.transition_logp(combo[i - 1].code, combo[i].code) \
                + emits[i][combo[i].code]
        score = score + model.transition_logp(combo[-1].code, END)
        key = tuple(registry.index(t) for t in combo)
        if best is None or score > best[0] or (score == best[0] and key < best[1]):
            best = (score, key, list(combo))
    return best


def test_criterion_4_decoder_oracle():
    with criterion(4, "decoder equals brute-force oracle on 200+ instances"):
        rng = random.Random(160493)
        checked = 0
        attempts = 0
        while checked < 200:
            attempts += 1
            assert attempts < 2000, "instance generator starved"
            model = _random_model(rng)
            sent = _random_sentence(rng)
            ruleset = _random_ruleset(rng)
            expected = _brute_force(model, ruleset, sent)
            if expected is None:
                continue  # the criterion covers rule sets with >= 1 valid path
            path, score = viterbi_decode(model, ruleset, sent)
            assert [t.code for t in path] == [t.code for t in expected[2]]
            assert abs(score - expected[0]) <= 1e-9
            checked += 1
        assert checked >= 200


# ---------------------------------------------------------------------- 5

def test_criterion_5_constraint_soundness(toy_corpus):
    with criterion(5, "constraint soundness and fallback flag"):
        model = train(toy_corpus)
        lex = seed_lexicon()
        ruleset = parse_rules("FORBID ARTDFS NCFS\nFORBID NC* ADJG?S\nREQUIRE PPOSPS NC*\n")
        fixtures = [
            "La mesa grande . El libro .",
            "¿Dónde está Juan? Mi casa es grande .",
            "Come bien y vive mejor .",
        ]
        for text in fixtures:
            for sent in tag_text(model, lex, ruleset, text):
                if sent.fallback:
                    continue
                assert ruleset.validate_sequence(list(sent.tags)) == []

        saturated = parse_rules("FORBID * *\n")
        two = [
            (make_token("la"), AmbiguityClass.of("ARTDFS", "PPO3FS")),
            (make_token("mesa"), AmbiguityClass.of("NCFS")),
        ]
        with pytest.raises(NoValidPath):
            viterbi_decode(model, saturated, two)

        out = tag_text(model, lex, saturated, "La mesa .")
        assert len(out) == 1 and out[0].fallback is True
        text = format_vertical(VerticalDocument(sentences=out))
        assert text.startswith("#FALLBACK\n")


# ---------------------------------------------------------------------- 6

def test_criterion_6_ambiguity_classes():
    with criterion(6, "seed ambiguity classes"):
        lex = seed_lexicon()
        assert set(lex.lookup("al").codes()) == {"PAL", "CSUBI"}
        assert {"ARTDFS", "PPO3FS"} <= set(lex.lookup("la").codes())
        assert {"ARTDNS", "PPO3XS"} <= set(lex.lookup("lo").codes())
        rows = {sig: (count, forms) for sig, count, forms in ambiguity_report(lex)}
        assert "al" in rows["CSUBI,PAL"][1]
        la_sig = lex.lookup("la").signature()
        assert "la" in rows[la_sig][1]
        lo_sig = lex.lookup("lo").signature()
        assert "lo" in rows[lo_sig][1]


# ---------------------------------------------------------------------- 7

def test_criterion_7_normalization_and_counts():
    with criterion(7, "smoothing normalization and hand counts"):
        corpus = [
            sentence(("la", "ARTDFS"), ("mesa", "NCFS"), (".", ".")),
            sentence(("la", "ARTDFS"), ("mesa", "NCFS"), (".", ".")),
        ]
        model = train(corpus)
        assert model.transition_counts[("ARTDFS", "NCFS")] == 2
        assert model.transition_counts[(START, "ARTDFS")] == 2
        assert model.transition_counts[("NCFS", ".")] == 2
        assert model.transition_counts[(".", END)] == 2
        assert model.emission_counts[("ARTDFS", "la")] == 2
        for row in model.transitions.values():
            assert abs(math.fsum(row.values()) - 1.0) <= 1e-9
        for row in model.emissions.values():
            assert abs(math.fsum(row.values()) - 1.0) <= 1e-9


# ---------------------------------------------------------------------- 8

def test_criterion_8_io_and_cli(tmp_path, capsys):
    with criterion(8, "vertical IO, evaluation and CLI exit codes"):
        canonical = "la\tARTDFS\nmesa\tNCFS\n.\t.\n\nel\tARTDMS\nlibro\tNCMS\n.\t.\n\n"
        src = tmp_path / "gold.vrt"
        src.write_bytes(canonical.encode("utf-8"))
        doc = read_vertical(src)
        dst = tmp_path / "copy.vrt"
        write_vertical(doc, dst)
        assert dst.read_bytes() == src.read_bytes()

        report = evaluate(doc, read_vertical(src))
        assert report.accuracy == 1.0

        gold_lines = [f"w{i}\tNCFS" for i in range(10)]
        pred_lines = list(gold_lines)
        pred_lines[4] = "w4\tNCMS"
        report = evaluate(
            parse_vertical("\n".join(gold_lines) + "\n"),
            parse_vertical("\n".join(pred_lines) + "\n"),
        )
        assert report.accuracy == 0.9

        # CLI exit-code contract
        assert main(["validate", str(src)]) == 0
        capsys.readouterr()

        bad = tmp_path / "bad.vrt"
        bad.write_text("la\tARTDFS\nx\tBADTAG\n", encoding="utf-8")
        assert main(["validate", str(bad)]) == 1
        captured = capsys.readouterr()
        assert "line 2" in captured.out

        model_path = tmp_path / "toy.model"
        assert main(["train", "--corpus", str(src), "--model", str(model_path)]) == 0
        capsys.readouterr()
        text_in = tmp_path / "in.txt"
        text_in.write_text("¿Dónde está Juan?", encoding="utf-8")
        assert main([
            "tag", str(text_in), "--model", str(model_path), "--lexicon", "seed",
        ]) == 0
        out = capsys.readouterr().out
        assert out.splitlines()[0] == "¿\tIQUEST"
