"""Exact audit of the collision probability bounds.

Every statement is checked by comparing the exact rational probability computed by enumeration against its
closed-form bound, over every parameter tuple satisfying the statement hypotheses. No tolerance is involved.
"""
import logging
import operator
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence

import pandas as pds

from .distribution import DistributionTable, difference_table, in_range_specs
from .parity import fixed_point_closed_form, fixed_point_count, parity_bound, parity_probability
from ..core import progress_bar

log = logging.getLogger(__name__)

_RELATIONS = {'<=': operator.le, '<': operator.lt, '==': operator.eq}


class AuditRecord:
    """One statement instance: exact value against bound."""
    __slots__ = ['statement', 'params', 'bound', 'exact', 'relation']

    def __init__(self, statement: str, params: Dict[str, int], bound: Fraction, exact: Fraction, relation: str = '<='):
        if relation not in _RELATIONS:
            raise ValueError(f"unknown relation {relation}")
        self.statement = statement
        self.params = params
        self.bound = Fraction(bound)
        self.exact = Fraction(exact)
        self.relation = relation

    @property
    def holds(self) -> bool:
        return _RELATIONS[self.relation](self.exact, self.bound)

    @property
    def strict(self) -> bool:
        return self.exact < self.bound

    @property
    def gap(self) -> Fraction:
        return self.bound - self.exact

    def __repr__(self):
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        return f"<AuditRecord: {self.statement} {params}: {self.exact} {self.relation} {self.bound} holds={self.holds}>"

    def to_dictionary(self) -> dict:
        return {
            "statement": self.statement,
            **self.params,
            "relation": self.relation,
            "bound": str(self.bound),
            "exact": str(self.exact),
            "bound_float": float(self.bound),
            "exact_float": float(self.exact),
            "holds": self.holds,
            "strict": self.strict
        }


class AuditReport:
    __slots__ = ['checked']

    def __init__(self, checked: List[AuditRecord]):
        self.checked = checked

    def __repr__(self):
        return f"<AuditReport: {len(self.checked)} checked, {len(self.failures)} failures>"

    def __len__(self):
        return len(self.checked)

    @property
    def failures(self) -> List[AuditRecord]:
        return [r for r in self.checked if not r.holds]

    @property
    def passed(self) -> bool:
        return not self.failures

    def select(self, statement: str) -> List[AuditRecord]:
        return [r for r in self.checked if r.statement == statement]

    def non_strict(self, statement: str or None = None) -> List[AuditRecord]:
        records = self.checked if statement is None else self.select(statement)
        return [r for r in records if not r.strict]

    def statements(self) -> List[str]:
        return list(dict.fromkeys(r.statement for r in self.checked))

    def summary(self) -> List[dict]:
        return [{"statement": name, "checked": len(self.select(name)),
                 "failures": sum(1 for r in self.select(name) if not r.holds),
                 "non_strict": len(self.non_strict(name))} for name in self.statements()]

    def to_dictionary(self) -> dict:
        return {"passed": self.passed, "summary": self.summary(),
                "records": [r.to_dictionary() for r in self.checked]}

    def to_dataframe(self) -> pds.DataFrame:
        return pds.DataFrame.from_records([r.to_dictionary() for r in self.checked])


class _Tables:
    """Memoizes the tables used by several statements during one audit."""

    def __init__(self, workers: int):
        self._tables = {}
        self._workers = workers

    def __call__(self, n: int, a: int, b: int, k: int) -> DistributionTable:
        key = (n, a, b, k)
        if key not in self._tables:
            self._tables[key] = difference_table(n, a, b, k, self._workers)
        return self._tables[key]


def _abk(n, a, b, k, **extra):
    return {"n": n, "a": a, "b": b, "k": k, **extra}


def _parity(n: int, k: int, tables: _Tables) -> Iterator[AuditRecord]:
    for c in range(1, n):
        yield AuditRecord('parity', {"n": n, "c": c, "k": k}, parity_bound(n, c), parity_probability(n, c, k).worst)


def _parity_fixed(n: int, k: int, tables: _Tables) -> Iterator[AuditRecord]:
    for c in range(1, n):
        yield AuditRecord('parity_fixed', {"n": n, "c": c, "k": k}, fixed_point_closed_form(n, c),
                          fixed_point_count(n, c, k), '==')


def _diffone(n: int, k: int, tables: _Tables) -> Iterator[AuditRecord]:
    for a in range(2, n):
        if 2 * a - 1 >= n:
            break
        table = tables(n, a, a - 1, k)
        for residue in range(n):
            yield AuditRecord('diffone', _abk(n, a, a - 1, k, residue=residue), Fraction(1, n),
                              table.p_mod(residue, n), '==')


def _difftwo(n: int, k: int, tables: _Tables) -> Iterator[AuditRecord]:
    for a in range(3, n):
        if 2 * a - 2 >= n:
            break
        table = tables(n, a, a - 2, k)
        for residue in range(n):
            yield AuditRecord('difftwo', _abk(n, a, a - 2, k, residue=residue), Fraction(1, n - 1),
                              table.p_mod(residue, n))


def _onetwo(n: int, k: int, tables: _Tables) -> Iterator[AuditRecord]:
    for a in range(2, n):
        if 2 * a - 1 < n:
            yield AuditRecord('onetwo', _abk(n, a, a - 1, k, t=0), Fraction(1, n), tables(n, a, a - 1, k).p(0), '<')
        if a >= 3 and 2 * a - 2 < n:
            yield AuditRecord('onetwo', _abk(n, a, a - 2, k, t=0), Fraction(1, 2 * (n - 1)),
                              tables(n, a, a - 2, k).p(0))


def _basecase(n: int, k: int, tables: _Tables) -> Iterator[AuditRecord]:
    if n % 2 == 1 and n >= 3:
        a = (n - 1) // 2
        yield AuditRecord('basecase', _abk(n, a, a, k), Fraction(1, n), tables(n, a, a, k).max_probability())


def _equal(n: int, k: int, tables: _Tables) -> Iterator[AuditRecord]:
    for a in range(1, n):
        if 2 * a >= n:
            break
        relation = '<=' if (n, a) == (5, 2) else '<'
        yield AuditRecord('equal', _abk(n, a, a, k, t=0), Fraction(1, n), tables(n, a, a, k).p(0), relation)


def _equal_gap(n: int, k: int, tables: _Tables) -> Iterator[AuditRecord]:
    for a in range(1, n):
        if 2 * a + 1 >= n:
            break
        yield AuditRecord('equal_gap', _abk(n, a, a, k, t=0), Fraction(1, n) - Fraction(1, 3 * n * (n - 1)),
                          tables(n, a, a, k).p(0))


def _equal_inner(n: int, k: int, tables: _Tables) -> Iterator[AuditRecord]:
    # labels of one block meet the largest label n, the rest is a labelling of n - 1 edges with target n
    for a in range(2, n):
        if 2 * a + 1 >= n:
            break
        p = tables(n - 1, a, a - 1, k).p(n)
        yield AuditRecord('equal_inner', _abk(n - 1, a, a - 1, k, t=n), Fraction(3, 4 * (n - 1)), p)
        if a == 2:
            yield AuditRecord('equal_inner', _abk(n - 1, a, a - 1, k, t=n), Fraction(2, 3 * (n - 1)), p)


def _diffeasy(n: int, k: int, tables: _Tables) -> Iterator[AuditRecord]:
    for a, b in in_range_specs(n):
        if a > b:
            yield AuditRecord('diffeasy', _abk(n, a, b, k, t=0), Fraction(1, 2 * (n - a - b + 1)),
                              tables(n, a, b, k).p(0))


def _b1(n: int, k: int, tables: _Tables) -> Iterator[AuditRecord]:
    for a in range(2, n - 1):
        yield AuditRecord('b1', _abk(n, a, 1, k, t=0), Fraction(n, 2 * (n - 1) * (a + 1)), tables(n, a, 1, k).p(0))


def _oddbigdiff(n: int, k: int, tables: _Tables) -> Iterator[AuditRecord]:
    if n % 2 == 1:
        for a, b in in_range_specs(n):
            if a >= b + 2:
                yield AuditRecord('oddbigdiff', _abk(n, a, b, k, t=0), Fraction(n + 1, 4 * n * (a + 1)),
                                  tables(n, a, b, k).p(0))


def _evenbigdiff(n: int, k: int, tables: _Tables) -> Iterator[AuditRecord]:
    if n % 2 == 0:
        for a, b in in_range_specs(n):
            if a >= b + 3 and b > 1:
                yield AuditRecord('evenbigdiff', _abk(n, a, b, k, t=0), Fraction(n, 4 * (n - 1) * a),
                                  tables(n, a, b, k).p(0))


def _bigdiff(n: int, k: int, tables: _Tables) -> Iterator[AuditRecord]:
    for a, b in in_range_specs(n):
        if a >= b + 3:
            yield AuditRecord('bigdiff', _abk(n, a, b, k, t=0), Fraction(2, 2 * n + 1), tables(n, a, b, k).p(0))


def _newonetwo(n: int, k: int, tables: _Tables) -> Iterator[AuditRecord]:
    for a, b in in_range_specs(n):
        if a - b in (1, 2):
            yield AuditRecord('newonetwo', _abk(n, a, b, k, t=0), Fraction(1, n), tables(n, a, b, k).p(0), '<')


def _global(n: int, k: int, tables: _Tables) -> Iterator[AuditRecord]:
    for a, b in in_range_specs(n):
        relation = '<=' if (n, a, b) == (5, 2, 2) else '<'
        yield AuditRecord('global', _abk(n, a, b, k, t=0), Fraction(1, n), tables(n, a, b, k).p(0), relation)


def _any_k(k: int) -> bool:
    return True


def _first_k(k: int) -> bool:
    return k == 1


def _odd_k(k: int) -> bool:
    # with an odd offset the largest label n + k - 1 has the parity of n
    return k % 2 == 1


# name -> (records generator, smallest n, offsets the statement is claimed for)
STATEMENTS: Dict[str, tuple] = {
    'parity': (_parity, 2, _any_k),
    'parity_fixed': (_parity_fixed, 2, _first_k),
    'diffone': (_diffone, 4, _any_k),
    'difftwo': (_difftwo, 5, _any_k),
    'onetwo': (_onetwo, 4, _first_k),
    'basecase': (_basecase, 3, _any_k),
    'equal': (_equal, 3, _any_k),
    'equal_gap': (_equal_gap, 4, _any_k),
    'equal_inner': (_equal_inner, 6, _first_k),
    'diffeasy': (_diffeasy, 4, _any_k),
    'b1': (_b1, 4, _any_k),
    'oddbigdiff': (_oddbigdiff, 5, _odd_k),
    'evenbigdiff': (_evenbigdiff, 8, _odd_k),
    'bigdiff': (_bigdiff, 6, _any_k),
    'newonetwo': (_newonetwo, 4, _any_k),
    'global': (_global, 3, _any_k),
}


def audit_bounds(n_max: int, k_set: Sequence[int] = (1,), statements: Optional[Sequence[str]] = None,
                 n_min: int = 2, workers: int = 1, progress: bool = False) -> AuditReport:
    """Checks every statement for every n in [n_min, n_max] and every offset in k_set.

    Parameters
    ----------
    n_max: int
        largest number of labels
    k_set: Sequence[int]
        offsets to audit, statements only claimed for k = 1 (or odd k) are skipped for the other offsets
    statements: Sequence[str], optional
        subset of :data:`STATEMENTS`, all by default
    n_min: int
        smallest number of labels
    workers: int
        forwarded to the exact enumeration
    progress: bool
        shows a progress bar over n

    Returns
    -------
    AuditReport
        one record per statement instance

    Raises
    ------
    SizeCapExceeded
        a needed table is above ORACLE/max_pairs
    ValueError
        unknown statement name

    Examples
    --------
    >>> audit_bounds(6, statements=['equal']).passed
    True
    """
    names = list(STATEMENTS) if statements is None else list(statements)
    unknown = [name for name in names if name not in STATEMENTS]
    if unknown:
        raise ValueError(f"unknown statements {unknown}, expected some of {list(STATEMENTS)}")
    if any(k < 1 for k in k_set):
        raise ValueError(f"offsets must be positive, got {list(k_set)}")
    tables = _Tables(workers)
    checked = []
    for n in progress_bar(progress=progress, desc="audit")(range(n_min, n_max + 1)):
        for k in k_set:
            for name in names:
                generate, smallest_n, claimed_for = STATEMENTS[name]
                if n >= smallest_n and claimed_for(k):
                    checked += list(generate(n, k, tables))
        log.debug(f"audit n={n}: {len(checked)} records so far")
    report = AuditReport(checked)
    for failure in report.failures:
        log.warning(f"bound violated: {failure}")
    return report
