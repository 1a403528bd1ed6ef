"""
Artifact Manager - Reads inputs and writes analysis artifacts
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional, Union

import aiofiles

from nucleuskit.cases.groups import group_as_category, small_group
from nucleuskit.context import FormalContext, read_cxt, write_cxt
from nucleuskit.core.errors import InputError, ParseError
from nucleuskit.order import FinPoset
from nucleuskit.quantale import QuantaleMatrix
from nucleuskit.setcat import FinCategory, Profunctor, constant_profunctor, hom_profunctor

PathLike = Union[str, Path]


def render_json(data: Dict[str, Any]) -> str:
    """Deterministic JSON text: two-space indent, keys in insertion order"""
    return json.dumps(data, indent=2) + "\n"


class ArtifactManager:
    """
    Loads contexts, posets, matrices and categories from disk and writes the
    JSON, DOT and .cxt artifacts produced by the engine.
    """

    def __init__(self, workspace: Path, logger: logging.Logger):
        self.workspace = workspace
        self.logger = logger

    async def read_text(self, path: PathLike) -> str:
        path = Path(path)
        if not path.is_file():
            raise InputError(f"no such input file: {path}")
        async with aiofiles.open(path, "r", encoding="utf-8") as f:
            text = await f.read()
        self.logger.debug(f"Read {len(text)} characters from {path}")
        return text

    async def load_json(self, path: PathLike) -> Any:
        text = await self.read_text(path)
        try:
            return json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(e.msg, e.lineno, e.colno, str(path))

    async def load_context(self, path: PathLike) -> FormalContext:
        """A formal context from a Burmeister .cxt file or from JSON"""
        if Path(path).suffix.lower() == ".cxt":
            return read_cxt(await self.read_text(path), str(path))
        return FormalContext.from_json(await self.load_json(path), str(path))

    async def load_matrix(self, path: PathLike) -> QuantaleMatrix:
        return QuantaleMatrix.from_json(await self.load_json(path), str(path))

    async def is_quantale_input(self, path: PathLike) -> bool:
        if Path(path).suffix.lower() == ".cxt":
            return False
        data = await self.load_json(path)
        return isinstance(data, dict) and "quantale" in data

    async def load_poset(self, path: PathLike) -> FinPoset:
        return FinPoset.from_json(await self.load_json(path), str(path))

    async def load_category(self, path: PathLike) -> FinCategory:
        """
        A finite category given explicitly, as a poset (``n``/``leq``) or as a
        named small group (``{"group": "Z2"}``).
        """
        data = await self.load_json(path)
        source = str(path)
        if not isinstance(data, dict):
            raise ParseError("category JSON must be an object", 1, 1, source)
        if "group" in data:
            return group_as_category(small_group(str(data["group"])))
        if "leq" in data:
            return FinCategory.from_poset(FinPoset.from_json(data, source))
        return FinCategory.from_json(data, source)

    async def load_profunctor(self, category_path: PathLike, profunctor_path: PathLike) -> Profunctor:
        """
        A matrix on the category of ``category_path``.

        The profunctor file is either a full table or a shorthand:
        ``{"kind": "hom"}`` for the hom matrix of the category and
        ``{"kind": "constant", "R": r}`` for the 1x1 matrix of size r.
        """
        C = await self.load_category(category_path)
        data = await self.load_json(profunctor_path)
        source = str(profunctor_path)
        if not isinstance(data, dict):
            raise ParseError("profunctor JSON must be an object", 1, 1, source)
        kind = data.get("kind", "table")
        if kind == "hom":
            return hom_profunctor(C)
        if kind == "constant":
            try:
                return constant_profunctor(int(data["R"]))
            except (KeyError, TypeError, ValueError):
                raise ParseError("constant profunctor needs an integer 'R'", 1, 1, source)
        if kind != "table":
            raise ParseError(f"unknown profunctor kind {kind!r}", 1, 1, source)
        if not any(key in data for key in ("A", "B", "category")):
            data = {**data, "category": C.to_json()}
        return Profunctor.from_json(data, source)

    def render(self, artifact: Dict[str, Any], output_format: str) -> str:
        """
        Text of an engine artifact in the requested format.

        Artifacts carry their JSON under ``"json"`` and, when the format
        applies, ready-made ``"dot"`` and ``"cxt"`` renderings.
        """
        if output_format == "json":
            return render_json(artifact["json"])
        if output_format not in artifact:
            raise InputError(f"format {output_format!r} is not available for this artifact")
        text = artifact[output_format]
        return text if text.endswith("\n") else text + "\n"

    async def write_text(self, text: str, path: PathLike) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        async with aiofiles.open(path, "w", encoding="utf-8") as f:
            await f.write(text)
        self.logger.debug(f"Wrote {len(text)} characters to {path}")
        return path

    async def save_artifact(
        self, artifact: Dict[str, Any], output_format: str, path: Optional[PathLike] = None
    ) -> str:
        """Render an artifact and write it when a path is given; returns the text"""
        text = self.render(artifact, output_format)
        if path is not None:
            await self.write_text(text, path)
            self.logger.info(f"Artifact saved to {path}")
        return text

    async def save_context(self, context: FormalContext, path: PathLike, name: str = "") -> Path:
        return await self.write_text(write_cxt(context, name), path)

    async def reload_json(self, path: PathLike) -> Any:
        """Parse an emitted JSON artifact back"""
        return await self.load_json(path)
