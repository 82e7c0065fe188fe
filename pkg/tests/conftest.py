import itertools
import math
import os

from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", deadline=None, max_examples=600)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


# Independent oracles.  None of these touch the package's kernels.

def hall_counts(n: int, m_max: int) -> list[int]:
    """Number of index-m subgroups of F_n for m = 1..m_max, by Hall's recursion
    a_m = m (m!)^(n-1) - sum_{k<m} ((m-k)!)^(n-1) a_k."""
    a = [0]
    for m in range(1, m_max + 1):
        s = m * math.factorial(m) ** (n - 1)
        s -= sum(math.factorial(m - k) ** (n - 1) * a[k] for k in range(1, m))
        a.append(s)
    return a[1:]


def transitive_tuple_count(n: int, m: int) -> int:
    """Brute-force count of n-tuples of permutations of m points acting transitively."""
    perms = list(itertools.permutations(range(m)))
    count = 0
    for tup in itertools.product(perms, repeat=n):
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for p in tup:
                for w in (p[v], p.index(v)):
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
        count += len(seen) == m
    return count


def brute_closure(gens, degree):
    """All elements of the group generated by ``gens`` (image tuples), by BFS."""
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(g[x[i]] for i in range(degree))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


# one line per acceptance criterion, printed after the run
ACCEPTANCE_RESULTS: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    for key, value in report.user_properties:
        if key == "criterion":
            ACCEPTANCE_RESULTS[value[0]] = ("PASS" if report.passed else "FAIL", value[1])


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_RESULTS):
        status, title = ACCEPTANCE_RESULTS[num]
        terminalreporter.write_line(f"criterion {num:2d}: {status}  {title}")
