"""Catalog type: the sorted, deduplicated keys of one graph/orbit type."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .graph import Key


@dataclass(frozen=True)
class CatalogDescriptor:
    kind: str  # "graphs" or "orbits"
    directed: bool
    order: int
    max_vertex_colors: int
    max_edge_colors: int
    connected_only: bool = False

    def __post_init__(self):
        if self.kind not in ("graphs", "orbits"):
            raise ValueError(f"kind must be 'graphs' or 'orbits', not {self.kind!r}")

    def replace(self, **changes) -> CatalogDescriptor:
        fields = dict(self.__dict__)
        fields.update(changes)
        return CatalogDescriptor(**fields)


@dataclass(eq=False)
class Catalog:
    descriptor: CatalogDescriptor
    keys: tuple[Key, ...]
    index: dict[Key, int] = field(init=False, repr=False)

    def __post_init__(self):
        self.keys = tuple(sorted(set(tuple(k) for k in self.keys)))
        self.index = {k: i for i, k in enumerate(self.keys)}

    @classmethod
    def from_keys(cls, descriptor: CatalogDescriptor, keys: Iterable[Key]) -> Catalog:
        return cls(descriptor, tuple(keys))

    def __len__(self) -> int:
        return len(self.keys)

    def __iter__(self) -> Iterator[Key]:
        return iter(self.keys)

    def __contains__(self, key) -> bool:
        return tuple(key) in self.index

    def __eq__(self, other) -> bool:
        if not isinstance(other, Catalog):
            return NotImplemented
        return self.descriptor == other.descriptor and self.keys == other.keys

    def position(self, key: Key) -> int:
        return self.index[tuple(key)]

    @property
    def kind(self) -> str:
        return self.descriptor.kind

    @property
    def directed(self) -> bool:
        return self.descriptor.directed

    @property
    def order(self) -> int:
        return self.descriptor.order
