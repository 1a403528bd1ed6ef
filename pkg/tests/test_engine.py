"""Tests for the NucleusKit engine"""

import pytest

from nucleuskit.core.engine import LOG_FILE, NucleusEngine, probe_carriers, thin_poset
from nucleuskit.core.errors import CapExceeded
from nucleuskit.cases import FinGroup, group_as_category
from nucleuskit.order import FinPoset
from nucleuskit.setcat import FinCategory

ANTICHAIN_2 = {"n": 2, "leq": [[True, False], [False, True]]}


@pytest.fixture
def engine(tmp_path):
    return NucleusEngine(
        workspace=str(tmp_path / "ws"), config={"max_size": 2, "carrier_cap": 1}
    )


def test_engine_initialization(engine, tmp_path):
    """Test engine initialization"""
    assert engine.run_config.max_size == 2
    assert engine.run_config.budget == 10_000_000
    assert (tmp_path / "ws" / "logs" / LOG_FILE).exists()


def test_thin_poset_detection():
    """Test that posets are thin and nontrivial groups are not"""
    P = thin_poset(FinCategory.from_poset(FinPoset.chain(2)))
    assert P is not None and P.leq[0][1]
    assert thin_poset(FinCategory.terminal()) is not None
    assert thin_poset(group_as_category(FinGroup.cyclic(2))) is None


def test_probe_carriers_on_a_poset():
    """Test that the 2-antichain offers its four lower sets"""
    C = FinCategory.from_poset(FinPoset.antichain(2))
    carriers = probe_carriers(C, 3, covariant=False)
    assert sorted(F.sizes for F in carriers) == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_probe_carriers_on_a_group():
    """Test representable plus constants, without duplicates"""
    C = group_as_category(FinGroup.cyclic(2))
    carriers = probe_carriers(C, 2, covariant=False)
    assert [F.sizes for F in carriers] == [(2,), (0,), (1,), (2,)]


@pytest.mark.asyncio
async def test_nucleus_of_a_context(engine, write_json):
    """Test the concept lattice of the 2x2 identity context"""
    path = write_json(
        "ctx.json",
        {"objects": ["a", "b"], "attributes": ["x", "y"], "incidence": [[True, False], [False, True]]},
    )
    result = await engine.compute_nucleus(str(path))
    assert result["status"] == "success"
    assert result["kind"] == "context"
    assert result["size"] == 4
    assert set(result["artifact"]) == {"json", "dot", "cxt"}


@pytest.mark.asyncio
async def test_nucleus_of_a_quantale_matrix(engine, write_json):
    """Test the approximate fixpoints of [[0.5]]"""
    path = write_json("m.json", {"quantale": "unit-interval-product", "entries": [[0.5]]})
    result = await engine.compute_nucleus(str(path))
    assert result["kind"] == "quantale"
    assert result["size"] == 2
    assert set(result["artifact"]) == {"json"}


@pytest.mark.asyncio
async def test_nucleus_budget(tmp_path, write_json):
    """Test that a tiny budget stops the generator enumeration"""
    path = write_json("m.json", {"quantale": "unit-interval-product", "entries": [[0.5]]})
    engine = NucleusEngine(config={"budget": 1})
    with pytest.raises(CapExceeded):
        await engine.compute_nucleus(str(path))


@pytest.mark.asyncio
async def test_dm_of_antichain(engine, write_json):
    """Test that the 2-antichain completes to four cuts"""
    result = await engine.compute_dm(str(write_json("p.json", ANTICHAIN_2)))
    assert result["size"] == 4
    assert result["artifact"]["cxt"].startswith("B")


@pytest.mark.asyncio
async def test_extend_hom_on_antichain(engine, write_json):
    """Test that the tight maps of the hom matrix are the cuts"""
    result = await engine.extend(
        str(write_json("p.json", ANTICHAIN_2)), str(write_json("h.json", {"kind": "hom"}))
    )
    assert result["status"] == "success"
    assert result["tight"] == 4
    assert result["loose"] >= result["tight"]
    assert result["artifact"]["json"]["skipped"] == []


@pytest.mark.asyncio
async def test_verify_quantale_suite(engine):
    """Test a passing suite run"""
    result = await engine.verify("quantale")
    assert result["status"] == "success"
    assert result["failures"] == 0
    assert result["artifact"]["json"]["suite"] == "quantale"


@pytest.mark.asyncio
async def test_save_writes_output(engine, write_json, tmp_path):
    """Test that save renders the configured format to a file"""
    result = await engine.compute_dm(str(write_json("p.json", ANTICHAIN_2)))
    out = tmp_path / "dm.json"
    text = await engine.save(result, str(out))
    assert out.read_text() == text
    assert '"cuts"' in text
