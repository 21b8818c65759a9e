"""Finite-scale verification of inverse semigroup actions, germ groupoids
and crossed products.

The heavy lifting happens in the C++ extension; this package provides a
dict-in / dict-out convenience layer over its JSON interface.
"""

import json as _json

from iscp._core import (  # noqa: F401
    AxiomError,
    ConditioningError,
    InternalCheckError,
    PreconditionError,
    ResourceError,
    StructuralError,
    commands,
    run_json,
)

__all__ = [
    "commands",
    "run",
    "validate_isg",
    "e_unitary",
    "spectrum",
    "germ_groupoid",
    "hausdorff",
    "units_closed",
    "cross_check_69",
    "expectation",
    "crossed_product",
    "induce",
    "verify_01m1",
    "verify_iterated",
    "corpus_run",
]


def run(command, payload, **options):
    """Run one toolkit operation.

    ``payload`` is a JSON-serialisable dict; the report comes back as a
    dict.  Options: seed, tol, tol_spec, cap, order.
    """
    return _json.loads(run_json(command, _json.dumps(payload), **options))


def _command(name):
    def call(payload, **options):
        return run(name, payload, **options)

    call.__name__ = name.replace("-", "_")
    call.__doc__ = f"Run the '{name}' operation; see the package README for the input format."
    return call


validate_isg = _command("validate-isg")
e_unitary = _command("e-unitary")
spectrum = _command("spectrum")
germ_groupoid = _command("germ-groupoid")
hausdorff = _command("hausdorff")
units_closed = _command("units-closed")
cross_check_69 = _command("cross-check-69")
expectation = _command("expectation")
crossed_product = _command("crossed-product")
induce = _command("induce")
verify_01m1 = _command("verify-01m1")
verify_iterated = _command("verify-iterated")


def corpus_run(seed, **options):
    """Run the bundled verification battery with an explicit seed."""
    return run("corpus-run", {}, seed=seed, **options)
