"""Smoke test for the primetree extension module.

Build and install first, e.g. `maturin develop -m crates/py/Cargo.toml`
or `pip install ./crates/py`, then run `python python/smoke_test.py`.
"""

import primetree

p4 = primetree.Tree(4, [(0, 1), (1, 2), (2, 3)])
assert p4.is_prime()
assert p4.sigma() == []

star = primetree.Tree(4, [(0, 1), (0, 2), (0, 3)])
assert not star.is_prime()
assert star.module_witness() == [1, 2]

a7 = primetree.family("A", [3])
assert a7.n == 7
assert a7.sigma() == [4, 5, 6]
assert a7.critical_family() == "A_7"
assert a7.check_critical([4, 5, 6])
assert not a7.check_critical([4, 5])

s = primetree.family("Skmn", [1, 2, 2])
ids = {label: i for i, label in enumerate(s.labels)}
x = [ids["a1"], ids["c2"]]
report = s.check_minimal(x)
assert not report.overall
assert report.conditions[1][3] == [ids["b2"]]
assert s.is_minimal_for(x) == s.is_minimal_for(x, brute=True) == False
sub, kept = s.extract_minimal(x)
assert sub.n == 4 and set(x) <= set(kept)

trees = primetree.all_trees(7)
assert len(trees) == 11
assert sum(t.is_prime() for t in trees) == 3

assert [primetree.count_formula("minimal3", n) for n in (4, 5, 6)] == [1, 1, 2]
for n, formula, enumerated in primetree.verify_formula("critical2", 10):
    assert formula == enumerated, n

parsed = primetree.Tree.parse(a7.to_edge_list())
assert parsed.is_isomorphic(a7) and parsed.canonical_code() == a7.canonical_code()

try:
    primetree.Tree(3, [(0, 1)])
except ValueError:
    pass
else:
    raise AssertionError("a forest was accepted")

print("smoke test passed")
