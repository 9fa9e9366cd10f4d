"""Catalog lookup by name or alias."""

import logging
import threading
from dataclasses import dataclass
from typing import Any, Dict, List

from catalog.data import RECORDS, ExpectedMetrics, MethodRecord
from core.exceptions import UnknownMethodError
from tableau.model import Tableau

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class CatalogEntry:
    tableau: Tableau
    source: str
    expected: ExpectedMetrics

    @property
    def name(self) -> str:
        return self.tableau.name


_lock = threading.Lock()
_loaded: Dict[str, CatalogEntry] = {}


def _normalize(name: str) -> str:
    return "".join(name.split()).lower().replace("–", "-")


def _index() -> Dict[str, MethodRecord]:
    index = {}
    for record in RECORDS:
        for key in (record.name,) + record.aliases:
            index[_normalize(key)] = record
    return index


_INDEX = _index()


def _pad_lower(rows, s: int) -> List[List[str]]:
    """Full s x s matrix from strictly-lower rows given for stages 2..s."""
    full = [["0"] * s]
    for i, row in enumerate(rows, start=1):
        full.append(list(row) + ["0"] * (s - i))
    return full


def _load(record: MethodRecord) -> CatalogEntry:
    if record.factory is not None:
        tableau = record.factory().renamed(record.name)
    else:
        s = len(record.b)
        tableau = Tableau.build(
            A=_pad_lower(record.A, s),
            b=record.b,
            c=record.c,
            name=record.name,
            claimed_order=record.expected.p,
            claimed_wso=record.expected.q,
        )
    logger.debug("Loaded catalog method %s (%d stages)", record.name, tableau.s)
    return CatalogEntry(tableau=tableau, source=record.source, expected=record.expected)


def available_names() -> List[str]:
    return [record.name for record in RECORDS]


def get(name: str) -> CatalogEntry:
    """
    Look up a method by name or alias.

    Args:
        name: catalog name such as "(5,3,3)", or an alias like "rk4"

    Returns:
        CatalogEntry: exact tableau with its reference metrics

    Raises:
        UnknownMethodError: name not in the catalog (lists what is available)
    """
    record = _INDEX.get(_normalize(name))
    if record is None:
        raise UnknownMethodError(name, available=available_names(), operation="catalog.get")
    with _lock:
        if record.name not in _loaded:
            _loaded[record.name] = _load(record)
        return _loaded[record.name]


def all_entries() -> List[CatalogEntry]:
    return [get(name) for name in available_names()]


def list_methods() -> List[Dict[str, Any]]:
    """One metadata row per method: name, source, s, p, q, A^(p+1), D."""
    return [
        {
            "name": record.name,
            "aliases": list(record.aliases),
            "source": record.source,
            "s": record.expected.s,
            "p": record.expected.p,
            "q": "inf" if record.expected.q is None else record.expected.q,
            "principal_error": record.expected.principal_error,
            "D": record.expected.D,
        }
        for record in RECORDS
    ]
