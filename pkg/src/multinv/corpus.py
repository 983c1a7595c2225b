"""Built-in example groups used by the self test, the CLI, and the demos.

Every entry is fully explicit: rank, default prime, and integer generator
matrices.  The inversion family, the order-2 sign-and-swap action and its
Klein-four overgroup, the doubled swap, the symmetric groups as permutation
matrices, the planar order-4 rotation with its rank-3 nonsplit companion,
and the planar order-3 rotation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matgroup import MatGroup, generate


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    n: int
    p: int
    generators: tuple[tuple[tuple[int, ...], ...], ...]
    description: str

    def group(self) -> MatGroup:
        return generate([list(map(list, g)) for g in self.generators])


def _neg_identity(n: int):
    return tuple(tuple(-1 if i == j else 0 for j in range(n)) for i in range(n))


def _perm_matrix(n: int, images: dict[int, int]):
    # column j carries e_{images[j]} (defaults to e_j)
    return tuple(tuple(1 if images.get(j, j) == i else 0 for j in range(n))
                 for i in range(n))


_FLIP_SWAP = ((-1, 0, 0), (0, 0, 1), (0, 1, 0))
_FLIP_FIRST = ((-1, 0, 0), (0, 1, 0), (0, 0, 1))
_DOUBLE_SWAP = ((0, 1, 0, 0), (1, 0, 0, 0), (0, 0, 0, 1), (0, 0, 1, 0))
_ROT4 = ((0, -1), (1, 0))
_ROT4_NONSPLIT = ((0, 0, 1), (1, 0, -1), (0, 1, 1))
_ROT3 = ((0, -1), (1, -1))


def _entries() -> list[CorpusEntry]:
    out = [
        CorpusEntry(f"inversion{n}", n, 2, (_neg_identity(n),),
                    f"order-2 inversion a -> -a on Z^{n}")
        for n in range(1, 6)
    ]
    out += [
        CorpusEntry("g1", 3, 2, (_FLIP_SWAP,),
                    "order 2: negate the first coordinate and swap the other two"),
        CorpusEntry("g2", 4, 2, (_DOUBLE_SWAP,),
                    "order 2: swap coordinates pairwise on Z^4"),
        CorpusEntry("gamma", 3, 2, (_FLIP_SWAP, _FLIP_FIRST),
                    "Klein four group containing the sign-and-swap involution"),
        CorpusEntry("s3", 3, 3,
                    (_perm_matrix(3, {0: 1, 1: 0}), _perm_matrix(3, {1: 2, 2: 1})),
                    "symmetric group S3 permuting the coordinates of Z^3"),
        CorpusEntry("s4", 4, 2,
                    (_perm_matrix(4, {0: 1, 1: 0}), _perm_matrix(4, {1: 2, 2: 1}),
                     _perm_matrix(4, {2: 3, 3: 2})),
                    "symmetric group S4 permuting the coordinates of Z^4"),
        CorpusEntry("rot4", 2, 2, (_ROT4,),
                    "order-4 rotation of Z^2"),
        CorpusEntry("rot4_nonsplit", 3, 2, (_ROT4_NONSPLIT,),
                    "order-4 action on the rank-3 nonsplit extension of the "
                    "rotation plane by a fixed line"),
        CorpusEntry("rot3", 2, 3, (_ROT3,),
                    "order-3 rotation of Z^2"),
    ]
    return out


_CORPUS = {e.name: e for e in _entries()}


def corpus_names() -> list[str]:
    return list(_CORPUS)


def corpus_entry(name: str) -> CorpusEntry:
    try:
        return _CORPUS[name]
    except KeyError:
        raise KeyError(f"unknown corpus entry {name!r}; "
                       f"known: {', '.join(_CORPUS)}") from None


def corpus_group(name: str) -> tuple[MatGroup, int]:
    e = corpus_entry(name)
    return e.group(), e.p


def classification_cases() -> list[tuple[str, MatGroup, int]]:
    """(name, group, prime) pairs the classifier is exercised on: every entry
    at its default prime, plus S3 in characteristic 2."""
    cases = [(e.name, e.group(), e.p) for e in _CORPUS.values()]
    s3 = corpus_entry("s3")
    cases.append(("s3@2", s3.group(), 2))
    return cases
