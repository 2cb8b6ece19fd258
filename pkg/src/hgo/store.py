"""On-disk catalog cache.

One text file per descriptor::

    # hgo-catalog v1 directed=0 kind=g n=4 vc=1 ec=1 conn=0 count=11
    0,0,0,0,0,0,0,0,0,0
    0,0,0,0,0,0,0,0,1,0
    ...

Files are written atomically (temp file + rename) and validated on load.
"""

from __future__ import annotations

import logging
import os
import re
import tempfile
from pathlib import Path

from .catalog import Catalog, CatalogDescriptor
from .errors import CacheDirMissing, CorruptCatalog
from .graph import key_length

log = logging.getLogger(__name__)

FORMAT_VERSION = "v1"
ENV_VAR = "HGO_CACHE_DIR"

_HEADER = re.compile(
    r"# hgo-catalog (?P<version>\S+) directed=(?P<directed>[01]) kind=(?P<kind>[go]) "
    r"n=(?P<n>\d+) vc=(?P<vc>\d+) ec=(?P<ec>\d+) conn=(?P<conn>[01]) count=(?P<count>\d+)$"
)


def file_name(desc: CatalogDescriptor) -> str:
    return "{}_{}_n{}_v{}_e{}_{}.cat".format(
        "d" if desc.directed else "u",
        desc.kind[0],
        desc.order,
        desc.max_vertex_colors,
        desc.max_edge_colors,
        "conn" if desc.connected_only else "all",
    )


def header(desc: CatalogDescriptor, count: int) -> str:
    return (f"# hgo-catalog {FORMAT_VERSION} directed={int(desc.directed)} kind={desc.kind[0]} "
            f"n={desc.order} vc={desc.max_vertex_colors} ec={desc.max_edge_colors} "
            f"conn={int(desc.connected_only)} count={count}")


def dumps(catalog: Catalog) -> str:
    lines = [header(catalog.descriptor, len(catalog))]
    lines.extend(",".join(map(str, k)) for k in catalog.keys)
    return "\n".join(lines) + "\n"


def loads(text: str, where: str = "<string>") -> Catalog:
    lines = text.split("\n")
    if not text.endswith("\n"):
        raise CorruptCatalog(f"{where}: missing final newline (truncated?)")
    lines.pop()
    if not lines:
        raise CorruptCatalog(f"{where}: empty file")
    m = _HEADER.match(lines[0])
    if m is None:
        if lines[0].startswith("# hgo-catalog ") and not lines[0].startswith(f"# hgo-catalog {FORMAT_VERSION} "):
            raise CorruptCatalog(f"{where}: unsupported format version in {lines[0]!r}")
        raise CorruptCatalog(f"{where}: malformed header {lines[0]!r}")
    if m["version"] != FORMAT_VERSION:
        raise CorruptCatalog(f"{where}: unsupported format version {m['version']}")
    desc = CatalogDescriptor(
        kind="graphs" if m["kind"] == "g" else "orbits",
        directed=m["directed"] == "1",
        order=int(m["n"]),
        max_vertex_colors=int(m["vc"]),
        max_edge_colors=int(m["ec"]),
        connected_only=m["conn"] == "1",
    )
    body = lines[1:]
    if len(body) != int(m["count"]):
        raise CorruptCatalog(f"{where}: header count {m['count']} but {len(body)} keys")
    width = key_length(desc.order, desc.directed)
    keys = []
    for lineno, line in enumerate(body, start=2):
        try:
            key = tuple(int(x) for x in line.split(","))
        except ValueError:
            raise CorruptCatalog(f"{where}:{lineno}: malformed key {line!r}") from None
        if len(key) != width or min(key) < 0:
            raise CorruptCatalog(f"{where}:{lineno}: bad key {line!r}")
        if keys and key <= keys[-1]:
            raise CorruptCatalog(f"{where}:{lineno}: keys not strictly ascending")
        keys.append(key)
    return Catalog(desc, tuple(keys))


def resolve_cache_dir(explicit: str | os.PathLike | None = None) -> Path:
    """Explicit argument, then ``$HGO_CACHE_DIR``, then the user cache dir."""
    if explicit:
        return Path(explicit)
    if os.environ.get(ENV_VAR):
        return Path(os.environ[ENV_VAR])
    base = os.environ.get("XDG_CACHE_HOME") or Path.home() / ".cache"
    return Path(base) / "hgo"


class CatalogStore:
    def __init__(self, root: str | os.PathLike):
        self.root = Path(root)

    def path(self, desc: CatalogDescriptor) -> Path:
        return self.root / file_name(desc)

    def load(self, desc: CatalogDescriptor) -> Catalog | None:
        path = self.path(desc)
        if not path.is_file():
            return None
        catalog = loads(path.read_text(), str(path))
        if catalog.descriptor != desc:
            raise CorruptCatalog(f"{path}: header describes {catalog.descriptor}")
        log.debug("loaded %s (%d keys)", path, len(catalog))
        return catalog

    def store(self, catalog: Catalog) -> Path:
        if not self.root.is_dir():
            raise CacheDirMissing(f"cache directory {self.root} does not exist")
        path = self.path(catalog.descriptor)
        data = dumps(catalog).encode()
        if path.is_file() and path.read_bytes() == data:
            return path
        fd, tmp = tempfile.mkstemp(dir=self.root, prefix=path.name, suffix=".tmp")
        try:
            with os.fdopen(fd, "wb") as fh:
                fh.write(data)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
        log.debug("stored %s (%d keys)", path, len(catalog))
        return path


def store(catalog: Catalog, cache_dir: str | os.PathLike) -> Path:
    return CatalogStore(cache_dir).store(catalog)


def load(desc: CatalogDescriptor, cache_dir: str | os.PathLike) -> Catalog | None:
    return CatalogStore(cache_dir).load(desc)
