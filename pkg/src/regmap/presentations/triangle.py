"""Triangle-group presentations and the rotation/reflection correspondence.

The rotation generators are ``A = PQ``, ``B = QR``, ``C = RP`` where
``P, Q, R`` are the reflections in the sides of a (2, m, n)-triangle.
"""

from __future__ import annotations

from .parser import Presentation
from .words import REFLECTION_ALPHABET, ROTATION_ALPHABET, Word, free_reduce


def triangle_presentation(m: int, n: int, *extra: Word | str) -> Presentation:
    """``<A, B, C | A^2, B^m, C^n, ABC, *extra>``."""
    base = Presentation(ROTATION_ALPHABET, ())
    return base.with_relators("A^2", f"B^{m}", f"C^{n}", "ABC", *extra)


def extended_triangle_presentation(m: int, n: int, *extra: Word | str) -> Presentation:
    """``<P, Q, R | P^2, Q^2, R^2, (PQ)^2, (QR)^m, (RP)^n, *extra>``."""
    base = Presentation(REFLECTION_ALPHABET, ())
    return base.with_relators(
        "P^2", "Q^2", "R^2", "(PQ)^2", f"(QR)^{m}", f"(RP)^{n}", *extra
    )


def _reflection_images() -> dict[str, Word]:
    pqr = REFLECTION_ALPHABET
    return {
        "A": Word.parse("PQ", pqr),
        "B": Word.parse("QR", pqr),
        "C": Word.parse("RP", pqr),
    }


def rotation_to_reflection(w: Word) -> Word:
    if w.alphabet != ROTATION_ALPHABET:
        raise ValueError(f"expected a word over {ROTATION_ALPHABET}, got {w.alphabet}")
    return w.substitute(_reflection_images())


def extended_presentation(p: Presentation) -> Presentation:
    """Presentation of the full (reflection) group from a rotation presentation.

    Rotation relators are rewritten with ``A=PQ, B=QR, C=RP`` and the
    involution relators are added.  The resulting group has twice the order
    of the rotation group exactly when the map is reflexible.
    """
    if p.generators != ROTATION_ALPHABET:
        raise ValueError("extended_presentation needs generators A, B, C")
    pqr = REFLECTION_ALPHABET
    rels = [Word.parse(s, pqr) for s in ("P^2", "Q^2", "R^2")]
    rels += [free_reduce(rotation_to_reflection(r)) for r in p.relators]
    return Presentation(pqr, tuple(r for r in rels if r))


def dual_presentation(p: Presentation) -> Presentation:
    """Presentation of the dual map's group.

    Dualizing swaps the roles of ``P`` and ``Q``; on rotations this sends
    ``A -> A^-1``, ``B -> C^-1``, ``C -> B^-1``.
    """
    if p.generators == REFLECTION_ALPHABET:
        pqr = REFLECTION_ALPHABET
        images = {
            "P": Word.generator("Q", pqr),
            "Q": Word.generator("P", pqr),
            "R": Word.generator("R", pqr),
        }
    elif p.generators == ROTATION_ALPHABET:
        abc = ROTATION_ALPHABET
        images = {
            "A": Word.generator("A", abc).inverse(),
            "B": Word.generator("C", abc).inverse(),
            "C": Word.generator("B", abc).inverse(),
        }
    else:
        raise ValueError("dual_presentation needs generators A, B, C or P, Q, R")
    return Presentation(p.generators, tuple(free_reduce(r.substitute(images)) for r in p.relators))
