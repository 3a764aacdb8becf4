"""Linguistic analysis pipeline: tokenization, sentence splitting, POS
tagging, lemmatization and noun-phrase chunking.

Everything here is rule- and lexicon-driven so that a given input text
always produces the same analysis. The shipped lexicon maps one surface
form to one Penn-style tag; capitalized lexicon keys (proper nouns,
element symbols) match case-sensitively, lowercase keys match any casing.
"""

from dataclasses import dataclass, field, replace
from functools import lru_cache
import re

from .resources import read_tsv, read_lines

TAGSET = {
    "NN", "NNS", "NNP", "NNPS", "VB", "VBD", "VBG", "VBN", "VBP", "VBZ",
    "JJ", "RB", "IN", "DT", "PRP", "WDT", "WP", "EX", "CC", "CD", "TO",
    "SYM", "PUNCT",
}

NOUN_TAGS = {"NN", "NNS", "NNP", "NNPS"}
VERB_TAGS = {"VB", "VBD", "VBG", "VBN", "VBP", "VBZ"}

# sentence-final punctuation that can close a token stream
_TERMINATORS = {".", "!", "?"}
_PUNCT_CHARS = set(".,;:!?()[]{}'\"`—–-−…“”‘’")


@dataclass(frozen=True)
class Token:
    surface: str
    start: int
    end: int
    pos: str = ""
    lemma: str = ""

    @property
    def is_word(self):
        return self.pos not in ("PUNCT", "SYM")


@dataclass(frozen=True)
class Sentence:
    tokens: tuple
    text: str
    index: int
    start: int = 0


@dataclass(frozen=True)
class NPChunk:
    """Token index range [start, end) within a sentence; head is the index
    of the last noun in the range."""
    start: int
    end: int
    head_index: int


# words split like don't -> do + n't; the alnum run may keep inner hyphens
_TOKEN_RE = re.compile(
    r"[A-Za-z0-9]+(?:-[A-Za-z0-9]+)*(?:['’]t)?|\S",
)
_NT_RE = re.compile(r"^([A-Za-z0-9-]*[A-Za-z])n(['’]t)$")


def tokenize(text):
    """Split text into word/number/punctuation tokens with char offsets."""
    tokens = []
    for m in _TOKEN_RE.finditer(text):
        surface, start, end = m.group(), m.start(), m.end()
        nt = _NT_RE.match(surface)
        if nt:
            stem = nt.group(1)
            tokens.append(Token(stem, start, start + len(stem)))
            tokens.append(Token("n" + nt.group(2), start + len(stem), end))
        else:
            tokens.append(Token(surface, start, end))
    return tokens


class Lexicon:
    """Surface -> tag map plus the irregular-lemma table.

    Lowercase keys match case-insensitively; capitalized keys (proper
    nouns, element symbols) only match the exact surface.
    """

    def __init__(self, entries, irregular):
        self.entries = dict(entries)
        self.irregular = dict(irregular)
        self.noun_lemmas = {s for s, t in self.entries.items() if t == "NN"}
        self.verb_lemmas = {s for s, t in self.entries.items() if t == "VBP"}
        self.verb_lemmas.update(s for s, t in self.entries.items() if t == "VB")

    def lookup(self, surface):
        tag = self.entries.get(surface)
        if tag is None:
            tag = self.entries.get(surface.lower())
        return tag

    @classmethod
    def from_files(cls, lexicon_rows, irregular_rows):
        return cls(
            {row[0]: row[1] for row in lexicon_rows},
            {row[0]: row[1] for row in irregular_rows},
        )


@lru_cache(maxsize=1)
def default_lexicon():
    return Lexicon.from_files(
        read_tsv("lexicon.tsv"), read_tsv("irregular_lemmas.tsv")
    )


@lru_cache(maxsize=1)
def _abbreviations():
    return set(read_lines("abbreviations.txt"))


def split_sentences(text, lexicon=None):
    """Split tokenized text into sentences.

    A boundary is a ./!/? token followed by whitespace and a capitalized
    token (or end of text). Listed abbreviations never split.
    """
    tokens = tokenize(text)
    sentences = []
    current = []

    def flush():
        if not current:
            return
        start = current[0].start
        end = current[-1].end
        rebased = tuple(
            replace(t, start=t.start - start, end=t.end - start)
            for t in current
        )
        sentences.append(
            Sentence(rebased, text[start:end], len(sentences), start=start)
        )
        current.clear()

    for i, token in enumerate(tokens):
        current.append(token)
        if token.surface not in _TERMINATORS:
            continue
        nxt = tokens[i + 1] if i + 1 < len(tokens) else None
        if nxt is None:
            flush()
            continue
        has_gap = nxt.start > token.end and text[token.end:nxt.start].isspace()
        if not has_gap or not nxt.surface[0].isupper():
            continue
        prev = tokens[i - 1] if i > 0 else None
        if (
            token.surface == "."
            and prev is not None
            and prev.end == token.start
            and prev.surface.lower() in _abbreviations()
        ):
            continue
        flush()
    flush()
    return sentences


_SUFFIX_ES = ("ses", "xes", "zes", "ches", "shes")


def pos_tag(sentence, lexicon=None):
    """Assign one tag per token: lexicon lookup, then suffix rules,
    then NN."""
    lexicon = lexicon or default_lexicon()
    tagged = []
    for i, token in enumerate(sentence.tokens):
        surface = token.surface
        if not any(c.isalnum() for c in surface):
            tag = "PUNCT" if set(surface) <= _PUNCT_CHARS else "SYM"
        elif surface[0].isdigit():
            tag = "CD"
        else:
            tag = lexicon.lookup(surface)
            if tag is None:
                tag = _suffix_tag(surface, i, tagged, lexicon)
        tagged.append(replace(token, pos=tag))
    return replace(sentence, tokens=tuple(tagged))


def _suffix_tag(surface, index, tagged_prefix, lexicon):
    lower = surface.lower()
    if lower.endswith("ly"):
        return "RB"
    if lower.endswith("ing"):
        return "VBG"
    if lower.endswith("ed"):
        prev = next(
            (t for t in reversed(tagged_prefix) if t.is_word), None
        )
        if prev is not None and _lemma_of(prev.surface, prev.pos, lexicon) in (
            "be", "have",
        ):
            return "VBN"
        return "VBD"
    if lower.endswith("s") and not lower.endswith("ss"):
        if _strip_plural(lower, lexicon.noun_lemmas) is not None:
            return "NNS"
    if index > 0 and surface[0].isupper():
        return "NNP"
    return "NN"


def _strip_plural(lower, known_nouns):
    """Undo plural morphology when the resulting stem is a known noun."""
    if lower.endswith("ies") and lower[:-3] + "y" in known_nouns:
        return lower[:-3] + "y"
    if lower.endswith("es") and lower[:-2] in known_nouns:
        return lower[:-2]
    if lower.endswith("s") and lower[:-1] in known_nouns:
        return lower[:-1]
    return None


_UNDOUBLE = {"bb", "dd", "gg", "mm", "nn", "pp", "rr", "tt"}


def _strip_verb(lower, known_verbs, suffixes):
    """Undo -ed / -ing morphology; prefers stems found in the verb list."""
    candidates = []
    for suffix in suffixes:
        if not lower.endswith(suffix) or len(lower) <= len(suffix) + 1:
            continue
        stem = lower[: -len(suffix)]
        candidates.extend((stem + "e", stem))
        if stem[-2:] in _UNDOUBLE:
            candidates.append(stem[:-1])
        if stem.endswith("i"):
            candidates.append(stem[:-1] + "y")
    for cand in candidates:
        if cand in known_verbs:
            return cand
    # no vocabulary support: plain strip with doubling repair
    for suffix in suffixes:
        if lower.endswith(suffix) and len(lower) > len(suffix) + 1:
            stem = lower[: -len(suffix)]
            if stem[-2:] in _UNDOUBLE:
                stem = stem[:-1]
            return stem
    return None


def _lemma_of(surface, pos, lexicon):
    lower = surface.lower()
    irregular = lexicon.irregular.get(lower)
    if irregular is not None and (pos in VERB_TAGS or pos in NOUN_TAGS):
        return irregular
    if pos in ("NNS", "NNPS"):
        stem = _strip_plural(lower, lexicon.noun_lemmas)
        if stem is not None:
            return stem
    elif pos == "VBZ":
        if lower.endswith("ies") and lower[:-3] + "y" in lexicon.verb_lemmas:
            return lower[:-3] + "y"
        if lower.endswith("es") and lower[:-2] in lexicon.verb_lemmas:
            return lower[:-2]
        if lower.endswith("s") and lower[:-1] in lexicon.verb_lemmas:
            return lower[:-1]
    elif pos in ("VBD", "VBN"):
        stem = _strip_verb(lower, lexicon.verb_lemmas, ("ed", "d"))
        if stem is not None:
            return stem
    elif pos == "VBG":
        stem = _strip_verb(lower, lexicon.verb_lemmas, ("ing",))
        if stem is not None:
            return stem
    return lower


def lemmatize(token, lexicon=None):
    """Lemma for a POS-tagged token: irregular table first, then
    vocabulary-checked suffix stripping, lowercased."""
    lexicon = lexicon or default_lexicon()
    return _lemma_of(token.surface, token.pos, lexicon)


def lemmatize_word(word, lexicon=None):
    """Best-effort lemma for a bare word (no tag), used for resource files."""
    lexicon = lexicon or default_lexicon()
    lower = word.lower()
    if lower in lexicon.irregular:
        return lexicon.irregular[lower]
    if lower in lexicon.noun_lemmas or lower in lexicon.verb_lemmas:
        return lower
    for pos in ("VBD", "VBG", "NNS"):
        lemma = _lemma_of(lower, pos, lexicon)
        if lemma != lower and (
            lemma in lexicon.verb_lemmas or lemma in lexicon.noun_lemmas
        ):
            return lemma
    return lower


def lemmatize_sentence(sentence, lexicon=None):
    lexicon = lexicon or default_lexicon()
    tokens = tuple(
        replace(t, lemma=_lemma_of(t.surface, t.pos, lexicon))
        for t in sentence.tokens
    )
    return replace(sentence, tokens=tokens)


_CHUNK_START = {"DT"}
_CHUNK_MOD = {"JJ", "VBN", "CD"}


def chunk_noun_phrases(sentence):
    """Greedy left-to-right maximal (DT)? (JJ|VBN|CD)* (NN.*)+ chunks."""
    tokens = sentence.tokens
    chunks = []
    i = 0
    while i < len(tokens):
        j = i
        if j < len(tokens) and tokens[j].pos in _CHUNK_START:
            j += 1
        while j < len(tokens) and tokens[j].pos in _CHUNK_MOD:
            j += 1
        k = j
        while k < len(tokens) and tokens[k].pos in NOUN_TAGS:
            k += 1
        if k > j:
            chunks.append(NPChunk(i, k, k - 1))
            i = k
        else:
            i += 1
    return chunks


def analyze(text, lexicon=None):
    """Full pipeline: sentences with tags and lemmas."""
    lexicon = lexicon or default_lexicon()
    return [
        lemmatize_sentence(pos_tag(s, lexicon), lexicon)
        for s in split_sentences(text)
    ]


def parse_pretagged(text, lexicon=None):
    """Parse pre-tagged input, one sentence per line of surface_TAG pairs."""
    lexicon = lexicon or default_lexicon()
    sentences = []
    for line in text.splitlines():
        if not line.strip():
            continue
        tokens = []
        offset = 0
        for pair in line.split():
            surface, _, tag = pair.rpartition("_")
            if not surface or tag not in TAGSET:
                raise ValueError(f"malformed pre-tagged token: {pair!r}")
            tokens.append(
                Token(surface, offset, offset + len(surface), pos=tag)
            )
            offset += len(surface) + 1
        plain = " ".join(t.surface for t in tokens)
        sentence = Sentence(tuple(tokens), plain, len(sentences))
        sentences.append(lemmatize_sentence(sentence, lexicon))
    return sentences
