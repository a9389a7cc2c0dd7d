"""Smoke tests for the python extension module."""

import math
import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))
from reference_pipeline import ParkMillerRef, random_tree_ref

randtree = pytest.importorskip("randtree")


@pytest.fixture
def default_prims():
    return randtree.PrimitiveSet(["x", "y"], ["ADD", "SUB", "MUL", "DIV"])


def test_park_miller_first_outputs():
    rng = randtree.ParkMiller(1)
    assert [rng.next() for _ in range(3)] == [16807, 282475249, 1622650073]


def test_park_miller_matches_reference_stream():
    ours = randtree.ParkMiller(987654321)
    ref = ParkMillerRef(987654321)
    for _ in range(1000):
        assert ours.next() == ref.next()


def test_seed_zero_rejected():
    with pytest.raises(randtree.Error):
        randtree.ParkMiller(0)


def test_random_tree_golden(default_prims):
    tree = randtree.random_tree(1001, default_prims, 42)
    assert tree.size == 1001
    assert tree.depth == 73
    again = randtree.random_tree(1001, default_prims, 42)
    assert tree.opcodes == again.opcodes


@pytest.mark.parametrize("size,seed", [(7, 1), (101, 42), (1001, 7), (555, 123456)])
def test_tree_matches_pure_python_pipeline(default_prims, size, seed):
    tree = randtree.random_tree(size, default_prims, seed)
    ref_opcodes, ref_depth = random_tree_ref(size, 2, 4, seed)
    assert tree.opcodes == ref_opcodes
    assert tree.depth == ref_depth


def test_sexpr_and_wellformed():
    prims = randtree.PrimitiveSet(["x"], ["ADD"])
    tree = randtree.random_tree(3, prims, 1)
    assert tree.sexpr() == "(ADD x x)"
    assert randtree.wellformed(tree)
    assert randtree.depth_recursive_oracle(tree) == 2


def test_primitive_parse_errors():
    with pytest.raises(randtree.Error, match="UnsupportedArity"):
        randtree.PrimitiveSet.parse("IF 3")
    with pytest.raises(randtree.Error, match="IncompleteSet"):
        randtree.PrimitiveSet.parse("x 0")


def test_invalid_size(default_prims):
    with pytest.raises(randtree.Error, match="InvalidSize"):
        randtree.random_tree(2, default_prims, 1)


def test_shape_roundtrip():
    tags = randtree.random_shape(100, 7)
    assert len(tags) == 201
    assert randtree.is_valid_preorder(tags)
    assert randtree.depth_from_lattice(tags) >= 1 + math.ceil(math.log2(101))


def test_catalan_and_enumeration():
    assert randtree.catalan_exact(10) == 16796
    assert randtree.enumerate_shapes(2) == ["FFLLL", "FLFLL"]


def test_cycle_lemma_report():
    report = randtree.verify_cycle_lemma(4)
    assert report.passed
    assert (report.arrangements, report.shapes, report.fiber_size) == (126, 14, 9)


def test_depth_summary():
    summary = randtree.sample_depths(3, 10, 1)
    assert summary.mean == 2.0
    assert summary.std_dev == 0.0
    assert summary.predicted == pytest.approx(math.sqrt(2 * math.pi * 3))


def test_chi_square():
    assert randtree.chi_square_critical(13, 0.001) == pytest.approx(34.528, abs=1e-3)
    result = randtree.chi_square_uniform(4, 14000, 1)
    assert result.passed
    assert result.dof == 13
    assert result.statistic == pytest.approx(17.524, abs=1e-6)


def test_flajolet():
    assert randtree.flajolet_depth_limit(100001) == pytest.approx(792.6694228385915)
    assert randtree.expected_height_internal(10000) == pytest.approx(354.4907701811)


def test_opcode_file_roundtrip(tmp_path, default_prims):
    tree = randtree.random_tree(501, default_prims, 9)
    path = str(tmp_path / "tree.rbt")
    tree.save(path)
    back = randtree.load_tree(path, default_prims)
    assert back.opcodes == tree.opcodes
    assert back.depth == tree.depth
    assert back.seed == tree.seed
    with pytest.raises(randtree.Error, match="PrimitiveMismatch"):
        randtree.load_tree(path, randtree.PrimitiveSet(["x"], ["ADD"]))


def test_bench_roundtrip(default_prims):
    records = randtree.time_generation([1001, 10001, 100001], 2, default_prims, 1)
    assert [r.size for r in records] == [1001, 10001, 100001]
    assert all(r.seconds > 0 for r in records)
    slope = randtree.loglog_slope(records)
    assert isinstance(slope, float)
