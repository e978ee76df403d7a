"""Finitely presented groups: words, free reduction, presentations, homs.

Words are sequences of (generator index, sign) letters with sign +1 or -1,
kept freely reduced at all times.  No word-problem machinery lives here:
relator compatibility of homomorphisms is only ever checked pointwise at a
representation, which is all the downstream computations need.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

Letter = Tuple[int, int]


class UnknownGeneratorError(ValueError):
    pass


@dataclass(frozen=True)
class Word:
    letters: Tuple[Letter, ...]

    def __post_init__(self) -> None:
        for gen, sign in self.letters:
            if sign not in (1, -1):
                raise ValueError(f"letter sign must be +1 or -1, got {sign}")
        for (g1, s1), (g2, s2) in zip(self.letters, self.letters[1:]):
            if g1 == g2 and s1 == -s2:
                raise ValueError("word is not freely reduced")

    def __len__(self) -> int:
        return len(self.letters)

    def is_empty(self) -> bool:
        return not self.letters

    def __mul__(self, other: "Word") -> "Word":
        return free_reduce(self.letters + other.letters)

    def max_generator(self) -> int:
        return max((g for g, _ in self.letters), default=-1)


EMPTY_WORD = Word(())


def free_reduce(letters: Iterable[Letter], n_generators: Optional[int] = None) -> Word:
    """Cancel adjacent inverse pairs until none remain; idempotent."""
    stack: List[Letter] = []
    for gen, sign in letters:
        if n_generators is not None and not 0 <= gen < n_generators:
            raise UnknownGeneratorError(f"generator index {gen} out of range")
        if stack and stack[-1][0] == gen and stack[-1][1] == -sign:
            stack.pop()
        else:
            stack.append((gen, sign))
    return Word(tuple(stack))


def invert(w: Word) -> Word:
    return Word(tuple((g, -s) for g, s in reversed(w.letters)))


def word_of(*letters: Letter) -> Word:
    return free_reduce(letters)


def generator(index: int) -> Word:
    return Word(((index, 1),))


def commutator(u: Word, v: Word) -> Word:
    return u * v * invert(u) * invert(v)


@dataclass(frozen=True)
class GroupPresentation:
    generator_names: Tuple[str, ...]
    relators: Tuple[Word, ...]

    def __post_init__(self) -> None:
        if not self.generator_names:
            raise ValueError("a presentation needs at least one generator")
        if len(set(self.generator_names)) != len(self.generator_names):
            raise ValueError("duplicate generator names")
        n = len(self.generator_names)
        for rel in self.relators:
            if rel.is_empty():
                raise ValueError("empty relator rejected")
            for gen, _ in rel.letters:
                if not 0 <= gen < n:
                    raise UnknownGeneratorError(
                        f"relator references generator index {gen}, but only {n} exist")

    @property
    def n_generators(self) -> int:
        return len(self.generator_names)

    def generator_index(self, name: str) -> int:
        try:
            return self.generator_names.index(name)
        except ValueError:
            raise UnknownGeneratorError(f"unknown generator {name!r}") from None


def free_group(names: Sequence[str]) -> GroupPresentation:
    return GroupPresentation(tuple(names), ())


def surface_presentation(genus: int) -> GroupPresentation:
    """2g generators a1,b1,...,ag,bg with the single relator [a1,b1]...[ag,bg]."""
    if genus < 1:
        raise ValueError("genus must be at least 1")
    names = []
    for k in range(1, genus + 1):
        names.append(f"a{k}")
        names.append(f"b{k}")
    relator = EMPTY_WORD
    for k in range(genus):
        relator = relator * commutator(generator(2 * k), generator(2 * k + 1))
    return GroupPresentation(tuple(names), (relator,))


def surface_genus(presentation: GroupPresentation) -> Optional[int]:
    """Genus g if the presentation is exactly surface_presentation(g), else None."""
    n = presentation.n_generators
    if n % 2 != 0 or len(presentation.relators) != 1:
        return None
    genus = n // 2
    if presentation.relators != surface_presentation(genus).relators:
        return None
    return genus


def parse_word(text: str, names: Sequence[str]) -> Word:
    """Word syntax: whitespace-separated ``name`` or ``name^-1`` letters.

    The single token ``1`` (or an empty string) denotes the identity.
    """
    tokens = text.split()
    if not tokens or tokens == ["1"]:
        return EMPTY_WORD
    letters: List[Letter] = []
    for tok in tokens:
        if tok.endswith("^-1"):
            name, sign = tok[:-3], -1
        else:
            name, sign = tok, 1
        if name not in names:
            raise UnknownGeneratorError(f"unknown generator {name!r} in word {text!r}")
        letters.append((list(names).index(name), sign))
    return free_reduce(letters)


def format_word(w: Word, names: Sequence[str]) -> str:
    if w.is_empty():
        return "1"
    return " ".join(names[g] if s == 1 else f"{names[g]}^-1" for g, s in w.letters)


@dataclass(frozen=True)
class GroupHom:
    """Generator-image data for a homomorphism between presented groups.

    Whether the images actually respect the source relators is checked
    pointwise at each representation of the target (see cohomology.pullback),
    never symbolically.
    """

    source: GroupPresentation
    target: GroupPresentation
    images: Tuple[Word, ...]

    def __post_init__(self) -> None:
        if len(self.images) != self.source.n_generators:
            raise ValueError("need one image word per source generator")
        n = self.target.n_generators
        for w in self.images:
            for gen, _ in w.letters:
                if not 0 <= gen < n:
                    raise UnknownGeneratorError(
                        f"image word references generator index {gen} of the target")

    def apply(self, w: Word) -> Word:
        """Image of a source word, freely reduced in the target."""
        out = EMPTY_WORD
        for gen, sign in w.letters:
            img = self.images[gen]
            out = out * (img if sign == 1 else invert(img))
        return out


def identity_hom(presentation: GroupPresentation) -> GroupHom:
    return GroupHom(presentation, presentation,
                    tuple(generator(i) for i in range(presentation.n_generators)))


def evaluate_word(w: Word, images: Sequence):
    """Product of generator images along w; the empty word gives the identity.

    Works for any square-matrix type exposing __mul__, inverse() and
    identity_like() (both Mat and DualMat do).
    """
    if not images:
        raise ValueError("need at least one generator image")
    result = images[0].identity_like()
    inverses: dict = {}
    for gen, sign in w.letters:
        if gen >= len(images):
            raise UnknownGeneratorError(f"generator index {gen} has no image")
        if sign == 1:
            result = result * images[gen]
        else:
            if gen not in inverses:
                inverses[gen] = images[gen].inverse()
            result = result * inverses[gen]
    return result
