"""Exact computations with linear subspaces of Mat_n(K) over F_p and Q."""

from ._msub import (
    FieldTooSmall,
    HypothesisFailed,
    InternalError,
    PreconditionViolated,
    Space,
    SpaceFileError,
    TooLarge,
    generic_rank,
    idempotent_family,
    idempotents,
    main2,
    max_left_ideal,
    normalize,
    profile,
    proposition_family,
    rad_equivalences,
    radical,
    read_space,
    verify,
    write_space,
)

__all__ = [
    "FieldTooSmall",
    "HypothesisFailed",
    "InternalError",
    "PreconditionViolated",
    "Space",
    "SpaceFileError",
    "TooLarge",
    "generic_rank",
    "idempotent_family",
    "idempotents",
    "main2",
    "max_left_ideal",
    "normalize",
    "profile",
    "proposition_family",
    "rad_equivalences",
    "radical",
    "read_space",
    "verify",
    "write_space",
]
