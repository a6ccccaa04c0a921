"""Bigram HMM tagger with bias-constrained Viterbi decoding.

The model is a first-order HMM: transition probabilities over adjacent
tags (plus sentence start/end pseudo-states) and emission probabilities
over wordforms, both add-k smoothed.  Transitions are smoothed over the
full tag registry so any candidate tag can be scored; emissions over the
training vocabulary plus an unknown-word symbol.

Decoding maximizes path log-probability (base 10) subject to bias rules
applied as hard constraints on real-tag pairs; start and end contexts
are never constrained.  Exact-score ties break toward the path whose
earlier differing position carries the tag that comes first in registry
order, which makes decoding fully deterministic.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .bias import RuleSet
from .errors import EmptyCorpus, ModelFormatError, NoValidPath, UnknownTag
from .lexicon import AmbiguityClass, Lexicon, guess_unknown
from .tagset import Tag, load_registry, parse_tag
from . import tokenizer as tok

START = "<s>"
END = "</s>"
UNKNOWN = "<unk>"

_NORM_TOL = 1e-9


@dataclass(frozen=True)
class TaggedSentence:
    """A non-empty sequence of (token, tag) pairs.

    `fallback` marks sentences whose constrained decoding was infeasible
    and that were re-decoded without bias rules.
    """

    pairs: tuple[tuple[tok.Token, Tag], ...]
    fallback: bool = False

    def __post_init__(self):
        if not self.pairs:
            raise ValueError("a tagged sentence must contain at least one token")

    @property
    def tokens(self) -> tuple[tok.Token, ...]:
        return tuple(t for t, _tag in self.pairs)

    @property
    def tags(self) -> tuple[Tag, ...]:
        return tuple(tag for _t, tag in self.pairs)


class HmmModel:
    """Trained (or loaded) bigram HMM.

    `transitions` maps a context code (START or a tag seen in training)
    to a full probability row over every registry tag plus END;
    `emissions` maps a tag seen in training to a row over the training
    vocabulary plus UNKNOWN.  Rows for contexts never seen in training
    are implicitly uniform.  Each stored row must sum to 1 within 1e-9.
    """

    def __init__(
        self,
        transitions: dict[str, dict[str, float]],
        emissions: dict[str, dict[str, float]],
        tag_counts: dict[str, int],
        vocab: frozenset[str],
        kt: float,
        ke: float,
        corpus_name: str = "",
        token_count: int = 0,
        transition_counts: dict[tuple[str, str], int] | None = None,
        emission_counts: dict[tuple[str, str], int] | None = None,
    ):
        self.transitions = transitions
        self.emissions = emissions
        self.tag_counts = dict(tag_counts)
        self.vocab = frozenset(vocab)
        self.kt = kt
        self.ke = ke
        self.corpus_name = corpus_name
        self.token_count = token_count
        self.transition_counts = transition_counts or {}
        self.emission_counts = emission_counts or {}

        registry = load_registry()
        self._n_tags = len(registry)
        self._uniform_trans = 1.0 / (self._n_tags + 1)
        self._uniform_emit = 1.0 / (len(self.vocab) + 1)
        total = sum(self.tag_counts.values())
        denom = total + kt * self._n_tags
        self._priors = {
            code: (self.tag_counts.get(code, 0) + kt) / denom
            for code in registry.codes()
        }
        self._validate_rows()

    def _validate_rows(self):
        registry = load_registry()
        trans_outcomes = set(registry.codes()) | {END}
        for context, row in self.transitions.items():
            if context != START and context not in registry:
                raise ModelFormatError(f"transition context {context!r} is not a registry tag")
            if set(row) != trans_outcomes:
                raise ModelFormatError(
                    f"transition row for {context!r} does not cover the registry plus {END}"
                )
            total = math.fsum(row.values())
            if abs(total - 1.0) > _NORM_TOL:
                raise ModelFormatError(
                    f"transition row for {context!r} sums to {total!r}"
                )
        emit_outcomes = set(self.vocab) | {UNKNOWN}
        for tag_code, row in self.emissions.items():
            if tag_code not in registry:
                raise ModelFormatError(f"emission context {tag_code!r} is not a registry tag")
            if set(row) != emit_outcomes:
                raise ModelFormatError(
                    f"emission row for {tag_code!r} does not cover the vocabulary plus {UNKNOWN}"
                )
            total = math.fsum(row.values())
            if abs(total - 1.0) > _NORM_TOL:
                raise ModelFormatError(
                    f"emission row for {tag_code!r} sums to {total!r}"
                )

    # ------------------------------------------------------------- scoring
    def transition_logp(self, prev_code: str, next_code: str) -> float:
        row = self.transitions.get(prev_code)
        prob = self._uniform_trans if row is None else row[next_code]
        return math.log10(prob)

    def emission_logp(self, tag_code: str, form: str) -> float:
        row = self.emissions.get(tag_code)
        prob = self._uniform_emit if row is None else row[form]
        return math.log10(prob)

    def unknown_prob(self, tag_code: str) -> float:
        row = self.emissions.get(tag_code)
        return self._uniform_emit if row is None else row[UNKNOWN]

    def prior(self, tag_code: str) -> float:
        """Smoothed unigram tag probability from the training counts."""
        return self._priors[tag_code]

    def emission_form(self, surface: str) -> str | None:
        """Vocabulary form to score, with a one-step lowercase fallback."""
        if surface in self.vocab:
            return surface
        lowered = surface.lower()
        if lowered in self.vocab:
            return lowered
        return None


def train(
    corpus: list[TaggedSentence],
    kt: float = 0.5,
    ke: float = 0.1,
    corpus_name: str = "",
) -> HmmModel:
    """Maximum-likelihood counts with add-k smoothing.

    Transition rows cover the full registry plus the end pseudo-tag;
    emission rows cover the observed vocabulary plus the unknown symbol.
    Deterministic for a given corpus and smoothing values.
    """
    if not corpus:
        raise EmptyCorpus("training corpus is empty")
    if kt <= 0 or ke <= 0:
        raise ValueError("smoothing constants must be positive")

    registry = load_registry()
    trans_counts: dict[tuple[str, str], int] = {}
    emit_counts: dict[tuple[str, str], int] = {}
    tag_counts: dict[str, int] = {}
    vocab: set[str] = set()
    token_count = 0

    def bump(d, key):
        d[key] = d.get(key, 0) + 1

    for sentence in corpus:
        prev = START
        for token, tag in sentence.pairs:
            code = tag.code
            if code not in registry:
                raise UnknownTag(code)
            bump(trans_counts, (prev, code))
            bump(emit_counts, (code, token.surface))
            bump(tag_counts, code)
            vocab.add(token.surface)
            token_count += 1
            prev = code
        bump(trans_counts, (prev, END))

    outcome_codes = list(registry.codes()) + [END]
    contexts = [START] + [c for c in registry.codes() if c in tag_counts]
    context_totals = {c: 0 for c in contexts}
    for (prev, _nxt), n in trans_counts.items():
        context_totals[prev] += n

    transitions = {}
    for context in contexts:
        total = context_totals[context]
        denom = total + kt * len(outcome_codes)
        transitions[context] = {
            out: (trans_counts.get((context, out), 0) + kt) / denom
            for out in outcome_codes
        }

    emit_outcomes = sorted(vocab) + [UNKNOWN]
    emissions = {}
    for code in (c for c in registry.codes() if c in tag_counts):
        total = tag_counts[code]
        denom = total + ke * len(emit_outcomes)
        emissions[code] = {
            out: (emit_counts.get((code, out), 0) + ke) / denom
            for out in emit_outcomes
        }

    return HmmModel(
        transitions=transitions,
        emissions=emissions,
        tag_counts=tag_counts,
        vocab=frozenset(vocab),
        kt=kt,
        ke=ke,
        corpus_name=corpus_name,
        token_count=token_count,
        transition_counts=trans_counts,
        emission_counts=emit_counts,
    )


# ------------------------------------------------------------------ model IO

def model_to_text(model: HmmModel) -> str:
    """Serialize a model: TRANSITIONS / EMISSIONS / META sections.

    Probability rows are ``context<TAB>outcome<TAB>log10-prob``.  META
    rows are ``key<TAB>value`` and carry the smoothing constants plus the
    sparse per-tag training counts needed to rebuild tag priors.
    """
    registry = load_registry()
    order = {code: i for i, code in enumerate(registry.codes())}
    order[START] = -1
    order[END] = len(order)

    lines = ["TRANSITIONS"]
    for context in sorted(model.transitions, key=order.__getitem__):
        row = model.transitions[context]
        for outcome in sorted(row, key=order.__getitem__):
            lines.append(f"{context}\t{outcome}\t{math.log10(row[outcome])!r}")
    lines.append("EMISSIONS")
    for tag_code in sorted(model.emissions, key=order.__getitem__):
        row = model.emissions[tag_code]
        for outcome in sorted(row, key=lambda w: (w == UNKNOWN, w)):
            lines.append(f"{tag_code}\t{outcome}\t{math.log10(row[outcome])!r}")
    lines.append("META")
    lines.append(f"corpus\t{model.corpus_name}")
    lines.append(f"tokens\t{model.token_count}")
    lines.append(f"kt\t{model.kt!r}")
    lines.append(f"ke\t{model.ke!r}")
    for code in sorted(model.tag_counts, key=order.__getitem__):
        lines.append(f"count.{code}\t{model.tag_counts[code]}")
    return "\n".join(lines) + "\n"


def save_model(model: HmmModel, path: str | Path):
    Path(path).write_text(model_to_text(model), encoding="utf-8")


def model_from_text(text: str) -> HmmModel:
    """Parse and validate a serialized model (normalization included)."""
    transitions: dict[str, dict[str, float]] = {}
    emissions: dict[str, dict[str, float]] = {}
    meta: dict[str, str] = {}
    section = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip():
            continue
        if raw in ("TRANSITIONS", "EMISSIONS", "META"):
            section = raw
            continue
        if section is None:
            raise ModelFormatError("data before the first section header", line_no)
        cells = raw.split("\t")
        if section == "META":
            if len(cells) != 2:
                raise ModelFormatError("META rows must be 'key<TAB>value'", line_no)
            meta[cells[0]] = cells[1]
            continue
        if len(cells) != 3:
            raise ModelFormatError(
                "probability rows must be 'context<TAB>outcome<TAB>log10-prob'", line_no
            )
        context, outcome, logp = cells
        try:
            prob = 10.0 ** float(logp)
        except ValueError:
            raise ModelFormatError(f"bad log-probability {logp!r}", line_no) from None
        table = transitions if section == "TRANSITIONS" else emissions
        table.setdefault(context, {})[outcome] = prob

    try:
        kt = float(meta["kt"])
        ke = float(meta["ke"])
    except KeyError as exc:
        raise ModelFormatError(f"META lacks required key {exc.args[0]!r}") from None
    tag_counts = {}
    for key, value in meta.items():
        if key.startswith("count."):
            code = key[len("count."):]
            try:
                parse_tag(code)
            except UnknownTag:
                raise ModelFormatError(f"META counts unknown tag {code!r}") from None
            tag_counts[code] = int(value)
    vocab = frozenset(
        form for row in emissions.values() for form in row if form != UNKNOWN
    )
    return HmmModel(
        transitions=transitions,
        emissions=emissions,
        tag_counts=tag_counts,
        vocab=vocab,
        kt=kt,
        ke=ke,
        corpus_name=meta.get("corpus", ""),
        token_count=int(meta.get("tokens", "0")),
    )


def load_model(path: str | Path) -> HmmModel:
    return model_from_text(Path(path).read_text(encoding="utf-8"))


# ----------------------------------------------------------------- decoding

def candidates(
    model: HmmModel,
    lexicon: Lexicon,
    token: tok.Token,
    sentence_initial: bool = False,
) -> AmbiguityClass:
    """Candidate tag set for one token.

    Split parts carry their candidates from the tokenizer; punctuation,
    numbers, codes and formulas map to their dedicated tags; everything
    else goes through the lexicon and then the unknown-word guesser.
    """
    if token.candidates:
        return AmbiguityClass(token.candidates)
    if token.kind == tok.KIND_PUNCTUATION:
        return AmbiguityClass(frozenset({parse_tag(punctuation_tag(token.surface))}))
    if token.kind == tok.KIND_NUMBER:
        code = "CARDGU" if "-" in token.surface else "CARDXP"
        return AmbiguityClass(frozenset({parse_tag(code)}))
    if token.kind == tok.KIND_CODE:
        return AmbiguityClass(frozenset({parse_tag("CODE")}))
    if token.kind == tok.KIND_FORMULA:
        return AmbiguityClass(frozenset({parse_tag("FO")}))
    found = lexicon.lookup(token.surface)
    if found is not None:
        return found
    return guess_unknown(token.surface, sentence_initial=sentence_initial)


_PUNCT_TAG_FALLBACKS = {
    "¿": "IQUEST", "¡": "IEXCL", "…": "...",
    "«": '"', "»": '"', "“": '"', "”": '"', "‘": '"', "’": '"', "'": '"',
    "—": "-", "–": "-",
    "[": "(", "{": "(", "]": ")", "}": ")",
}


def punctuation_tag(surface: str) -> str:
    """Registry tag code for a punctuation surface (PNC when unmapped)."""
    if surface in load_registry():
        return surface
    return _PUNCT_TAG_FALLBACKS.get(surface, "PNC")


def emission_scores(
    model: HmmModel, sentence: list[tuple[tok.Token, AmbiguityClass]]
) -> list[dict[str, float]]:
    """Per-token emission log-probabilities for every candidate tag.

    Known wordforms use the smoothed emission rows.  Unknown wordforms
    share each tag's unknown-word mass across the token's candidate set
    proportionally to smoothed tag priors from training.
    """
    scores = []
    for token, cls in sentence:
        tags = cls.sorted_tags()
        form = model.emission_form(token.surface)
        row = {}
        if form is not None:
            for t in tags:
                row[t.code] = model.emission_logp(t.code, form)
        else:
            denom = math.fsum(model.prior(t.code) for t in tags)
            for t in tags:
                row[t.code] = math.log10(
                    model.unknown_prob(t.code) * model.prior(t.code) / denom
                )
        scores.append(row)
    return scores


def viterbi_decode(
    model: HmmModel,
    ruleset: RuleSet | None,
    sentence: list[tuple[tok.Token, AmbiguityClass]],
) -> tuple[list[Tag], float]:
    """Best constrained tag path and its log10 score.

    Among paths whose every adjacent real-tag pair is allowed by the
    rule set, returns the maximum log-probability path; exact ties break
    toward the path that is lexicographically smallest in registry order
    at the earliest differing position.  Raises NoValidPath when the
    constraints eliminate every path.
    """
    if not sentence:
        return [], 0.0
    registry = load_registry()
    emits = emission_scores(model, sentence)
    layers = [cls.sorted_tags() for _tok, cls in sentence]
    for position, layer in enumerate(layers):
        if not layer:
            raise ValueError(f"empty candidate set at position {position}")

    # best[code] = (score, prefix of registry indices), lexicographic-min
    # prefix among equal-score paths ending in this tag.
    best: dict[str, tuple[float, tuple[int, ...]]] = {}
    for t in layers[0]:
        score = model.transition_logp(START, t.code) + emits[0][t.code]
        best[t.code] = (score, (registry.index(t),))

    for i in range(1, len(layers)):
        nxt: dict[str, tuple[float, tuple[int, ...]]] = {}
        for t in layers[i]:
            emit_lp = emits[i][t.code]
            idx = registry.index(t)
            chosen: tuple[float, tuple[int, ...]] | None = None
            for p in layers[i - 1]:
                prev_best = best.get(p.code)
                if prev_best is None:
                    continue
                if ruleset is not None and not ruleset.allowed(p, t):
                    continue
                score = prev_best[0] + model.transition_logp(p.code, t.code) + emit_lp
                prefix = prev_best[1] + (idx,)
                if (
                    chosen is None
                    or score > chosen[0]
                    or (score == chosen[0] and prefix < chosen[1])
                ):
                    chosen = (score, prefix)
            if chosen is not None:
                nxt[t.code] = chosen
        if not nxt:
            raise NoValidPath(i)
        best = nxt

    final: tuple[float, tuple[int, ...]] | None = None
    for t in layers[-1]:
        state = best.get(t.code)
        if state is None:
            continue
        score = state[0] + model.transition_logp(t.code, END)
        if (
            final is None
            or score > final[0]
            or (score == final[0] and state[1] < final[1])
        ):
            final = (score, state[1])
    if final is None:
        raise NoValidPath(len(layers) - 1)
    codes = registry.codes()
    path = [parse_tag(codes[i]) for i in final[1]]
    return path, final[0]


# ----------------------------------------------------------------- pipeline

def prepare_sentence(
    sentence_tokens: list[tok.Token],
    model: HmmModel,
    lexicon: Lexicon,
    enclitic_split: bool = True,
) -> list[tuple[tok.Token, AmbiguityClass]]:
    """Resolve splits and attach candidate sets for one sentence."""
    first_wordish: tok.Token | None = next(
        (t for t in sentence_tokens if t.kind != tok.KIND_PUNCTUATION), None
    )
    prepared: list[tuple[tok.Token, AmbiguityClass]] = []
    for token in sentence_tokens:
        expanded = [token]
        if token.kind == tok.KIND_WORD:
            decision = tok.split_portmanteau(token)
            if decision is not None:
                expanded = tok.expand_token(token, decision, tok.KIND_PORTMANTEAU_PART)
            elif enclitic_split:
                decision = tok.split_enclitics(token, lexicon)
                if decision is not None:
                    expanded = tok.expand_token(token, decision, tok.KIND_ENCLITIC_PART)
        for part in expanded:
            prepared.append((
                part,
                candidates(
                    model, lexicon, part,
                    sentence_initial=token is first_wordish,
                ),
            ))
    return prepared


def tag_text(
    model: HmmModel,
    lexicon: Lexicon,
    ruleset: RuleSet | None,
    text: str,
    enclitic_split: bool = True,
    abbreviations: frozenset[str] | None = None,
    multiwords: tuple[str, ...] = (),
    jobs: int = 1,
) -> list[TaggedSentence]:
    """Tokenize, split sentences, and decode each one.

    Sentences whose constrained decoding is infeasible fall back to
    unconstrained decoding and come back flagged.  Output order matches
    input order regardless of `jobs`.
    """
    tokens = tok.tokenize(text, abbreviations)
    if multiwords:
        tokens = tok.merge_multiwords(tokens, text, multiwords)
    sentences = tok.sentence_split(tokens)
    prepared = [
        prepare_sentence(s, model, lexicon, enclitic_split=enclitic_split)
        for s in sentences
    ]

    def decode(prep: list[tuple[tok.Token, AmbiguityClass]]) -> TaggedSentence:
        try:
            tags, _score = viterbi_decode(model, ruleset, prep)
            flagged = False
        except NoValidPath:
            tags, _score = viterbi_decode(model, None, prep)
            flagged = True
        return TaggedSentence(
            pairs=tuple((token, tag) for (token, _cls), tag in zip(prep, tags)),
            fallback=flagged,
        )

    if jobs > 1 and len(prepared) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(decode, prepared))
    return [decode(p) for p in prepared]
