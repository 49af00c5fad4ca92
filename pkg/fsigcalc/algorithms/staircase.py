# fsigcalc/algorithms/staircase.py
from collections import deque
from typing import Iterable, List, Tuple

from fsigcalc.exceptions import DomainError
from fsigcalc.poly.polynomial import Monomial, minimalize


def _in_ideal(mono: Monomial, generators: Tuple[Monomial, ...]) -> bool:
    return any(g.divides(mono) for g in generators)


def standard_monomials(generators: Iterable[Monomial]) -> List[Monomial]:
    """Monomials outside the monomial ideal, found by BFS from 1.

    The complement of a monomial ideal is closed under division, so every
    standard monomial is reachable from 1 by steps of x or y.
    """
    gens = minimalize(generators)
    if not any(g.j == 0 for g in gens) or not any(g.i == 0 for g in gens):
        raise DomainError("monomial ideal must contain a power of x and a power of y")
    start = Monomial(0, 0)
    if _in_ideal(start, gens):
        return []
    visited = {start}
    queue = deque([start])
    found = []
    while queue:
        current = queue.popleft()
        found.append(current)
        for neighbor in (Monomial(current.i + 1, current.j), Monomial(current.i, current.j + 1)):
            if neighbor not in visited and not _in_ideal(neighbor, gens):
                visited.add(neighbor)
                queue.append(neighbor)
    return sorted(found)


def colength(generators: Iterable[Monomial]) -> int:
    return len(standard_monomials(generators))


def staircase_ideal(alpha: int, beta: int, eta: int) -> Tuple[Monomial, ...]:
    """(x^beta, y^eta) + (x^(beta-1-t) y^(alpha-beta+1+2t) : 0 <= t < beta), minimalized."""
    if alpha < beta or beta < 0 or eta < 0:
        raise DomainError(f"need alpha >= beta >= 0 and eta >= 0, got {(alpha, beta, eta)}")
    gens = [Monomial(beta, 0), Monomial(0, eta)]
    gens.extend(Monomial(beta - 1 - t, alpha - beta + 1 + 2 * t) for t in range(beta))
    return minimalize(gens)
