import pytest

from allmatroids import up_to
from matroidkit import constructions, core
from matroidkit.constructions import uniform
from matroidkit.elasticity import has_minor
from matroidkit.harness import catalog
from matroidkit.harness.catalog import CatalogError


def test_parse_examples():
    assert catalog.parse_line("4 2 111111", "lex01") == uniform(2, 4)
    M = catalog.parse_line("3 1 110", "lex01")
    assert M.r == 1 and core.loops(M) == 0b100
    with pytest.raises(CatalogError, match="illegal"):
        catalog.parse_line("4 2 11111*", "lex01")
    U23 = catalog.parse_line("3 2 **0", "revlex_star")
    assert core.bases_of(U23) == [0b011, 0b101]


@pytest.mark.parametrize("line", ["4 2 1111", "4 2 000000", "4 2 100001", "x 2 1", "3 4 1", "4 2"])
def test_parse_errors(line):
    with pytest.raises(CatalogError):
        catalog.parse_line(line, "lex01")


def test_load_names_line(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("# header\n4 2 111111\n\n4 2 100001\n")
    with pytest.raises(CatalogError, match=r"bad\.txt:4"):
        catalog.load_catalog(str(path))


def test_load_dedupes(tmp_path):
    path = tmp_path / "cat.txt"
    path.write_text("4 2 111111\n3 2 111\n4 2 111111\n")
    assert [e.id for e in catalog.load_catalog(str(path))] == ["line1", "line2"]
    assert len(catalog.load_catalog(str(path), dedupe=False)) == 3


@pytest.mark.parametrize("fmt", catalog.FORMATS)
def test_round_trip(tmp_path, small_catalog, fmt):
    path = tmp_path / f"cat.{fmt}"
    catalog.write_catalog(str(path), small_catalog, fmt)
    back = catalog.load_catalog(str(path), fmt)
    assert [e.matroid.table for e in back] == [e.matroid.table for e in small_catalog]
    for e in back[:50]:
        line = catalog.emit_line(e.matroid, fmt)
        assert catalog.parse_line(line, fmt) == e.matroid


def test_formats_differ_in_order():
    # every 2-subset of {0,1,2,3} but {0,3}: lex 01 02 03 12 13 23, revlex 01 02 12 03 13 23
    M = core.from_bases(4, [0b0011, 0b0101, 0b0110, 0b1010, 0b1100])
    assert catalog.emit_line(M, "lex01") == "4 2 110111"
    assert catalog.emit_line(M, "revlex_star") == "4 2 ***0**"


def test_generated_examples():
    gf2_7 = {core.canonical_key(e.matroid) for e in catalog.gen_catalog(2, 7)}
    assert core.canonical_key(constructions.fano()) in gf2_7
    U24 = core.canonical_key(uniform(2, 4))
    assert U24 not in {core.canonical_key(M) for _, M in catalog.simple_representable(2, 4)}
    assert U24 in {core.canonical_key(M) for _, M in catalog.simple_representable(3, 4)}


def test_no_duplicates(small_catalog):
    keys = [core.canonical_key(e.matroid) for e in small_catalog]
    assert len(keys) == len(set(keys)) == 262
    assert len({e.id for e in small_catalog}) == len(small_catalog)


@pytest.mark.parametrize("p,excluded", [
    (2, ["U(2,4)"]),
    (3, ["U(2,5)", "U(3,5)", "F7", "F7*"]),
])
def test_generator_complete(p, excluded):
    """Simple GF(p) matroids on <= 7 elements, against excluded-minor filtering
    of the full enumeration."""
    ex = [constructions.named(s) for s in excluded]
    gen = {core.canonical_key(M) for _, M in catalog.simple_representable(p, 7)}
    brute = {
        core.canonical_key(M) for M in up_to(7)
        if core.is_simple(M) and not any(has_minor(M, N) for N in ex)
    }
    assert gen == brute


def test_resolve_catalog(tmp_path):
    path = tmp_path / "extra.txt"
    path.write_text("6 3 " + "1" * 20 + "\n")
    mixed = catalog.resolve_catalog(f"gen:gf2:5+{path}")
    assert mixed[-1].id == "line1"
    assert all(e.matroid.n <= 4 for e in catalog.resolve_catalog("gen:gf3:6", max_n=4))
    assert catalog.resolve_catalog(f"gen:gf2:5+{path}", max_n=5)[-1].id != "line1"
    with pytest.raises(CatalogError):
        catalog.gen_catalog(2, 11)
    with pytest.raises(OSError):
        catalog.resolve_catalog(str(tmp_path / "missing.txt"))
