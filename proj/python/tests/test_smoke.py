import pytest

import hodgeham


def test_hodge_table_shape_and_checks():
    table = hodgeham.hodge_table(1, 3, 4)
    assert table["algebra"] == {"k": 1, "module": "regular"}
    assert table["cells"]
    for cell in table["cells"]:
        assert set(cell) == {
            "n", "i", "degree", "dim_chain", "dim_cycle", "dim_boundary",
            "dim_homology",
        }
        # one-variable algebras have no homology above level 1
        if cell["n"] >= 2:
            assert cell["dim_homology"] == 0
    assert all(c["status"] == "pass" for c in table["checks"])


def test_truncated_module_and_csv():
    table = hodgeham.hodge_table(1, 2, 4, module="trunc:2")
    assert table["algebra"]["module"] == "trunc:2"
    assert all(c["status"] == "pass" for c in table["checks"])
    csv = hodgeham.hodge_table_csv(1, 2, 4, module="trunc:2")
    lines = csv.strip().split("\n")
    assert lines[0] == "n,i,degree,dim_chain,dim_cycle,dim_boundary,dim_homology"
    assert len(lines) == len(table["cells"]) + 1


def test_verify_suite():
    report = hodgeham.verify("qkernel", deg_max=12)
    names = [c["name"] for c in report["checks"]]
    assert names == ["q_kernel_equals_boundary_image",
                     "q_surjective_positive_degree"]
    assert all(c["status"] == "pass" for c in report["checks"])
    assert report["cells"] == []


def test_unknown_suite_raises():
    with pytest.raises(ValueError):
        hodgeham.verify("nonsense")


def test_bad_module_raises():
    with pytest.raises(ValueError):
        hodgeham.hodge_table(2, 2, 2, module="var:9")


def test_derivation_norms_increase():
    norms = hodgeham.derivation_norms(0, 12)
    assert norms == list(range(1, 13))
    assert hodgeham.derivation_norms(2, 8) == list(range(1, 9))


def test_determinism_across_jobs():
    a = hodgeham._core.hodge_table_json(2, 2, 3, "regular", 200000, 1, False)
    b = hodgeham._core.hodge_table_json(2, 2, 3, "regular", 200000, 4, False)
    assert a == b
