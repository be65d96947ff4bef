"""Reductive blocks of the s_1 and s_2 images, loaded from a YAML data file."""

from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from ..exactratio import ONE, RatFunc, rf_parse
from ..utils.exceptions import ConfigError, ParseError, ReductiveUnsupportedError
from .bratteli import AugShape, parse_shape
from .matrices import Matrix

DEFAULT_TABLES = Path(__file__).resolve().parent.parent / "data" / "reductive_tables.yaml"

PathKey = Tuple[AugShape, ...]


class TableBlockSpec(BaseModel):
    """One block as written in the data file."""

    name: str = Field(description="Family label, e.g. 'q16-q21'")
    keys: List[str] = Field(description="Five-shape path segments, in matrix order")
    rows: List[List[str]] = Field(description="Matrix rows; column j is the image of keys[j]")


class TableFileSpec(BaseModel):
    s1: List[TableBlockSpec] = Field(default_factory=list)
    s2: List[TableBlockSpec] = Field(default_factory=list)


class TableBlock(BaseModel):
    """A parsed block: path keys and their exact matrix."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str
    keys: Tuple[PathKey, ...]
    rows: Tuple[Tuple[RatFunc, ...], ...]

    def position(self, key: PathKey) -> Optional[int]:
        try:
            return self.keys.index(key)
        except ValueError:
            return None


class ReductiveTables(BaseModel):
    """Blocks by generator index."""

    model_config = ConfigDict(frozen=True)

    blocks: Dict[int, Tuple[TableBlock, ...]]

    def lookup(self, index: int, keys: Sequence[PathKey]) -> Matrix:
        """Submatrix of the block holding all ``keys``, in the given order.

        Raises:
            ReductiveUnsupportedError: If no block holds every key
        """
        for block in self.blocks.get(index, ()):
            positions = [block.position(key) for key in keys]
            if all(p is not None for p in positions):
                return [[block.rows[r][c] for c in positions] for r in positions]  # type: ignore[index]
        listed = "; ".join(" ".join(str(s) for s in key) for key in keys)
        raise ReductiveUnsupportedError(f"No s{index} table covers the paths {listed}")

    def perturbed(self, index: int, block: int, row: int, col: int) -> "ReductiveTables":
        """Copy with one entry increased by 1 (for negative controls)."""
        blocks = dict(self.blocks)
        target = blocks[index][block]
        rows = [list(r) for r in target.rows]
        rows[row][col] = rows[row][col] + ONE
        changed = target.model_copy(update={"rows": tuple(tuple(r) for r in rows)})
        blocks[index] = blocks[index][:block] + (changed,) + blocks[index][block + 1 :]
        return ReductiveTables(blocks=blocks)


def _parse_block(spec: TableBlockSpec) -> TableBlock:
    keys = tuple(tuple(parse_shape(s) for s in key.split()) for key in spec.keys)
    size = len(keys)
    if any(len(key) != 5 for key in keys):
        raise ConfigError(f"Block {spec.name}: every key must list five shapes")
    if len(spec.rows) != size or any(len(row) != size for row in spec.rows):
        raise ConfigError(f"Block {spec.name}: expected a {size}x{size} matrix")
    rows = tuple(tuple(rf_parse(entry) for entry in row) for row in spec.rows)
    return TableBlock(name=spec.name, keys=keys, rows=rows)


def load_tables(path: Path) -> ReductiveTables:
    """Load and parse a table file.

    Raises:
        ConfigError: If the file is missing or malformed
    """
    if not path.exists():
        raise ConfigError(f"Table file not found: {path}")
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}
        spec = TableFileSpec(**data)
        return ReductiveTables(
            blocks={
                1: tuple(_parse_block(b) for b in spec.s1),
                2: tuple(_parse_block(b) for b in spec.s2),
            }
        )
    except yaml.YAMLError as e:
        raise ConfigError(f"Invalid YAML in table file: {e}") from e
    except (ValidationError, ParseError, TypeError) as e:
        raise ConfigError(f"Invalid table file {path}: {e}") from e


@lru_cache(maxsize=None)
def default_tables() -> ReductiveTables:
    return load_tables(DEFAULT_TABLES)
