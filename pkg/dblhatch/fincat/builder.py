"""
Fluent builders for small finite categories and 2-categories.

Identities and every composite forced by the unit laws are generated;
the remaining composites must be declared. Example::

    chain = (
        CategoryBuilder("Three")
        .objects("0", "1", "2")
        .morphism("f", "0", "1")
        .morphism("g", "1", "2")
        .morphism("gf", "0", "2")
        .compose("g", "f", "gf")
        .build()
    )
"""

from dblhatch.errors import MalformedTable
from dblhatch.fincat.category import FinCategory
from dblhatch.fincat.twocat import TwoCategory


def put(table: dict, key: tuple, value: str) -> None:
    """Insert a table entry, refusing to overwrite a different value."""
    existing = table.get(key)
    if existing is not None and existing != value:
        raise MalformedTable(
            f"conflicting entries for {key}: {existing} and {value}", [*key, existing, value]
        )
    table[key] = value


class CategoryBuilder:
    def __init__(self, name: str = ""):
        self.name = name
        self._objects: list[str] = []
        self._morphisms: dict[str, tuple[str, str]] = {}
        self._composites: list[tuple[str, str, str]] = []

    def objects(self, *names: str) -> "CategoryBuilder":
        self._objects.extend(n for n in names if n not in self._objects)
        return self

    def morphism(self, name: str, src: str, tgt: str) -> "CategoryBuilder":
        self.objects(src, tgt)
        self._morphisms[name] = (src, tgt)
        return self

    def compose(self, g: str, f: str, result: str) -> "CategoryBuilder":
        """Declare ``g∘f = result``."""
        self._composites.append((g, f, result))
        return self

    def _category_tables(self) -> dict:
        morphisms = dict(self._morphisms)
        identities = {}
        for x in self._objects:
            identities[x] = f"id_{x}"
            morphisms[f"id_{x}"] = (x, x)
        composition: dict[tuple[str, str], str] = {}
        for f, (x, y) in morphisms.items():
            put(composition, (f, identities[x]), f)
            put(composition, (identities[y], f), f)
        for g, f, result in self._composites:
            put(composition, (g, f), result)
        return {
            "name": self.name,
            "objects": list(self._objects),
            "morphisms": morphisms,
            "identities": identities,
            "composition": composition,
        }

    def build(self) -> FinCategory:
        return FinCategory(**self._category_tables())


class TwoCategoryBuilder(CategoryBuilder):
    """Adds 2-cells; identity 2-cells are named ``1_f``."""

    def __init__(self, name: str = ""):
        super().__init__(name)
        self._cells: dict[str, tuple[str, str]] = {}
        self._vertical: list[tuple[str, str, str]] = []
        self._horizontal: list[tuple[str, str, str]] = []

    def cell(self, name: str, f: str, g: str) -> "TwoCategoryBuilder":
        self._cells[name] = (f, g)
        return self

    def vcompose(self, psi: str, theta: str, result: str) -> "TwoCategoryBuilder":
        """Declare ``psi•theta = result`` (``theta`` first)."""
        self._vertical.append((psi, theta, result))
        return self

    def hcompose(self, psi: str, theta: str, result: str) -> "TwoCategoryBuilder":
        """Declare ``psi∘theta = result`` (``theta`` on the earlier morphisms)."""
        self._horizontal.append((psi, theta, result))
        return self

    def build(self) -> TwoCategory:
        tables = self._category_tables()
        morphisms = tables["morphisms"]
        cells = dict(self._cells)
        cell_identities = {}
        for f in morphisms:
            cell_identities[f] = f"1_{f}"
            cells[f"1_{f}"] = (f, f)

        vertical: dict[tuple[str, str], str] = {}
        for theta, (f, g) in cells.items():
            put(vertical, (theta, cell_identities[f]), theta)
            put(vertical, (cell_identities[g], theta), theta)
        for psi, theta, result in self._vertical:
            put(vertical, (psi, theta), result)

        horizontal: dict[tuple[str, str], str] = {}
        for (g, f), h in tables["composition"].items():
            put(horizontal, (cell_identities[g], cell_identities[f]), cell_identities[h])
        for theta, (f, _) in cells.items():
            x, y = morphisms[f]
            put(horizontal, (theta, cell_identities[tables["identities"][x]]), theta)
            put(horizontal, (cell_identities[tables["identities"][y]], theta), theta)
        for psi, theta, result in self._horizontal:
            put(horizontal, (psi, theta), result)

        return TwoCategory(
            **tables,
            cells=cells,
            cell_identities=cell_identities,
            vertical_composition=vertical,
            horizontal_composition=horizontal,
        )
