"""Tests for the artifact manager"""

import pytest

from nucleuskit.context import FormalContext, write_cxt
from nucleuskit.core.errors import InputError, ParseError
from nucleuskit.manager import ArtifactManager, render_json

ANTICHAIN_2 = {"n": 2, "leq": [[True, False], [False, True]]}


@pytest.fixture
def manager(tmp_path, mock_logger):
    return ArtifactManager(tmp_path, mock_logger)


def test_render_json_is_stable():
    """Test indentation and the trailing newline"""
    assert render_json({"b": 1, "a": [1]}) == '{\n  "b": 1,\n  "a": [\n    1\n  ]\n}\n'


@pytest.mark.asyncio
async def test_missing_file_is_input_error(manager, tmp_path):
    """Test that reading a missing file fails as bad input"""
    with pytest.raises(InputError):
        await manager.read_text(tmp_path / "absent.json")


@pytest.mark.asyncio
async def test_bad_json_reports_position(manager, tmp_path):
    """Test that JSON syntax errors carry line and column"""
    path = tmp_path / "bad.json"
    path.write_text('{\n  "n": 2,\n  oops\n}')
    with pytest.raises(ParseError) as excinfo:
        await manager.load_json(path)
    assert (excinfo.value.line, excinfo.value.column) == (3, 3)
    assert excinfo.value.exit_code == 2


@pytest.mark.asyncio
async def test_load_context_from_cxt(manager, tmp_path):
    """Test that .cxt files go through the Burmeister reader"""
    context = FormalContext.from_matrix([[True, False], [True, True]])
    path = tmp_path / "ctx.cxt"
    path.write_text(write_cxt(context))
    assert await manager.load_context(path) == context
    assert not await manager.is_quantale_input(path)


@pytest.mark.asyncio
async def test_quantale_input_detection(manager, write_json):
    """Test that a 'quantale' key marks a matrix file"""
    path = write_json("m.json", {"quantale": "unit-interval-product", "entries": [[0.5]]})
    assert await manager.is_quantale_input(path)
    M = await manager.load_matrix(path)
    assert M.shape == (1, 1)


@pytest.mark.asyncio
async def test_load_category_shorthands(manager, write_json):
    """Test named groups and posets as categories"""
    group = await manager.load_category(write_json("g.json", {"group": "Z3"}))
    assert group.n_objects == 1 and group.n_morphisms == 3
    poset = await manager.load_category(write_json("p.json", ANTICHAIN_2))
    assert poset.n_objects == 2 and poset.is_discrete()


@pytest.mark.asyncio
async def test_category_must_be_object(manager, write_json):
    """Test that a JSON list is not a category"""
    with pytest.raises(ParseError):
        await manager.load_category(write_json("c.json", [1, 2]))


@pytest.mark.asyncio
async def test_load_profunctor_kinds(manager, write_json):
    """Test the hom, constant and table forms"""
    category = write_json("p.json", ANTICHAIN_2)
    hom = await manager.load_profunctor(category, write_json("h.json", {"kind": "hom"}))
    assert hom.sizes == ((1, 0), (0, 1))
    constant = await manager.load_profunctor(
        category, write_json("r.json", {"kind": "constant", "R": 2})
    )
    assert constant.size(0, 0) == 2
    table = await manager.load_profunctor(
        category, write_json("t.json", {"sizes": [[1, 2], [0, 1]]})
    )
    assert table.A == hom.A and table.size(0, 1) == 2


@pytest.mark.asyncio
async def test_profunctor_shorthand_errors(manager, write_json):
    """Test a missing size and an unknown kind"""
    category = write_json("p.json", ANTICHAIN_2)
    with pytest.raises(ParseError):
        await manager.load_profunctor(category, write_json("r.json", {"kind": "constant"}))
    with pytest.raises(ParseError):
        await manager.load_profunctor(category, write_json("k.json", {"kind": "dual"}))


def test_render_unavailable_format(manager):
    """Test that asking for DOT of a JSON-only artifact fails"""
    with pytest.raises(InputError):
        manager.render({"json": {}}, "dot")


@pytest.mark.asyncio
async def test_save_and_reload(manager, tmp_path):
    """Test that a saved JSON artifact parses back"""
    artifact = {"json": {"cuts": [], "embed": []}, "dot": "digraph {}"}
    path = tmp_path / "out" / "dm.json"
    text = await manager.save_artifact(artifact, "json", path)
    assert path.read_text() == text
    assert await manager.reload_json(path) == artifact["json"]
    assert await manager.save_artifact(artifact, "dot") == "digraph {}\n"
