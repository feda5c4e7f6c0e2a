"""Python access to the germkit core. Reports come back as plain dicts."""

import json
from fractions import Fraction

from . import _germkit
from ._germkit import InputError, InternalError, builtin_file

__all__ = [
    "InputError",
    "InternalError",
    "analyze",
    "builtin_file",
    "classify",
    "flip_transfer",
    "ic_disproof",
    "kad_disproof",
    "quot",
    "tchain",
    "verify_paper",
]


def analyze(graph_text, index=None, generator=True):
    return json.loads(_germkit.analyze(graph_text, index, generator))


def verify_paper(sweep_max=49):
    return json.loads(_germkit.verify_paper(sweep_max))


def quot(chain):
    """Report for a chain given as a list of ints or a string such as "2,5"."""
    if not isinstance(chain, str):
        chain = ",".join(str(a) for a in chain)
    return json.loads(_germkit.quot_report(chain))


def tchain(n, q):
    return json.loads(_germkit.tchain_report(n, q))


def classify(descriptor_text):
    return json.loads(_germkit.classify(descriptor_text))


def flip_transfer(index, kc, plus_indices, w=()):
    return Fraction(_germkit.flip_transfer(index, str(Fraction(kc)), list(plus_indices), [str(Fraction(x)) for x in w]))


def ic_disproof(m, mprime, aprime):
    return json.loads(_germkit.ic_disproof(m, mprime, aprime))


def kad_disproof(m, mprime, aprime, subcase):
    return json.loads(_germkit.kad_disproof(m, mprime, aprime, subcase))
