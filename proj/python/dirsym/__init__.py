"""Discrete symmetries of momentum-polynomial Dirac Hamiltonians."""

import json

from ._dirsym import (
    DirsymError,
    HamiltonianModel,
    PauliString,
    Representative,
    SymmetrySolution,
    classify_square,
    is_unitary,
    kron,
    load_model,
    model_from_json,
    pauli_decompose,
    solve,
    zoo,
    zoo_names,
)
from . import _dirsym


def audit(model, seed=42, tol=1e-10):
    """Full symmetry report as a dict (same schema as `dirsym audit --format json`)."""
    return json.loads(_dirsym.audit_json(model, seed, tol))


def operator_table(seed=42, tol=1e-10):
    return json.loads(_dirsym.table_json(seed, tol))


def enumerate_perturbations(model, max_degree=0, seed=42, tol=1e-10):
    return json.loads(_dirsym.perturb_json(model, max_degree, seed, tol))


def classify_perturbation(model, pauli, exponents=None, coefficient=1.0, seed=42):
    return json.loads(_dirsym.classify_perturbation_json(model, pauli, exponents or [], coefficient, seed))


__all__ = [
    "DirsymError",
    "HamiltonianModel",
    "PauliString",
    "Representative",
    "SymmetrySolution",
    "audit",
    "classify_perturbation",
    "classify_square",
    "enumerate_perturbations",
    "is_unitary",
    "kron",
    "load_model",
    "model_from_json",
    "operator_table",
    "pauli_decompose",
    "solve",
    "zoo",
    "zoo_names",
]
