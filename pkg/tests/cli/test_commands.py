"""
Tests for the dblhatch command line.
"""

import json

import pytest

from dblhatch.cli.commands import EXIT_ERROR, EXIT_FAIL, EXIT_PASS, load, main
from dblhatch.cli.corpus import corpus_entry
from dblhatch.cli.dblx import emit_dblx, parse_dblx
from dblhatch.dblcore.functor import DoubleFunctor, are_isomorphic, constant_functor, initial_functor
from dblhatch.errors import BudgetExceeded, UnknownName
from dblhatch.fincat.twocat import TwoCategory
from dblhatch.homotopy.pseudo_functor import HorizontallyPseudoDoubleFunctor
from dblhatch.model.generators import pinned_functor
from dblhatch.weakdbl.strictify import strictify


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestLoad:
    """Test cases for resolving command arguments."""

    def test_file(self, tmp_path, square):
        """Test that an existing path is parsed as DBLX."""
        path = tmp_path / "mine.dblx"
        path.write_text(emit_dblx(square), encoding="utf-8")

        assert load(str(path)).model_dump() == square.model_dump()

    def test_corpus_stem(self):
        """Test that a missing .dblx file falls back to the corpus entry of its stem."""
        assert load("I5.dblx").name == "I5"

    def test_unknown(self):
        """Test that an unknown argument raises UnknownName."""
        with pytest.raises(UnknownName):
            load("NoSuchShape")


@pytest.mark.integration
class TestCheck:
    """Test cases for ``dblhatch check``."""

    def test_trivial_fibration_fails_dt4(self, capsys):
        """Test that I5 is reported as failing dt4 with exit code 1."""
        code, out, _ = run(capsys, "check", "trivial-fibration", "I5.dblx")

        assert code == EXIT_FAIL
        assert "dt4: fail" in out

    def test_cofibrant(self, capsys):
        """Test that 𝕍𝟚 is cofibrant."""
        code, out, _ = run(capsys, "check", "cofibrant", "TwoV")

        assert code == EXIT_PASS
        assert out.startswith("check cofibrant: PASS")

    def test_vertical_chain_is_not_cofibrant(self, capsys):
        """Test that the vertical shape condition is reported."""
        code, out, _ = run(capsys, "check", "cofibrant", "VThree")

        assert code == EXIT_FAIL
        assert "vertical 1/2 union: fail" in out

    def test_biequivalence_json(self, capsys):
        """Test the JSON report of the fold 𝟙⊔𝟙 -> 𝕍𝟚."""
        code, out, _ = run(capsys, "check", "biequivalence", "epsilonV2", "--json")
        report = json.loads(out)

        assert code == EXIT_FAIL
        assert report["schema"] == 1
        assert report["verdicts"]["db3"] is False
        assert report["counterexamples"]["db3"]["cells"] == ["u"]
        assert "timing" not in report

    def test_reformulations(self, capsys):
        """Test that --reformulations adds the 2-categorical verdicts."""
        code, out, _ = run(capsys, "check", "biequivalence", "IsoCollapse", "--reformulations", "--json")

        assert code == EXIT_PASS
        assert {"hb3", "vb2", "vb3"} <= set(json.loads(out)["verdicts"])

    def test_weak_input(self, capsys, tmp_path):
        """Test that a functor between weak double categories uses the weak check."""
        path = tmp_path / "unit.dblx"
        path.write_text(emit_dblx(strictify(corpus_entry("Bracket")).unit), encoding="utf-8")

        code, out, _ = run(capsys, "check", "biequivalence", str(path), "--json")

        assert code == EXIT_PASS
        assert "weak setting" in json.loads(out)["notes"]

    def test_fibration(self, capsys):
        """Test that the identity of 𝕊 is a double fibration."""
        code, _, _ = run(capsys, "check", "fibration", "idS")

        assert code == EXIT_PASS

    def test_globular(self, capsys):
        """Test the globular invertibility check on 𝕊."""
        code, out, _ = run(capsys, "check", "globular", "Sq")

        assert code == EXIT_PASS
        assert "globular: pass" in out

    @pytest.mark.parametrize("kind", ["lemma220", "globular"])
    def test_globular_kind_names(self, capsys, kind):
        """Test that both names of the globular check are accepted on the command line."""
        code, out, _ = run(capsys, "check", kind, "Sq2")

        assert code == EXIT_PASS
        assert out.startswith(f"check {kind}: PASS")

    def test_wrong_input_kind(self, capsys):
        """Test that checking a functor property of a double category is an input error."""
        code, _, err = run(capsys, "check", "fibration", "Sq")

        assert code == EXIT_ERROR
        assert "PreconditionFailed: input kind" in err

    def test_unknown_name(self, capsys):
        """Test that an unknown input exits with code 2."""
        code, _, err = run(capsys, "check", "cofibrant", "NoSuchShape")

        assert code == EXIT_ERROR
        assert "unknown name: NoSuchShape" in err

    def test_parse_error(self, capsys, tmp_path):
        """Test that a malformed file exits with code 2 and names the line."""
        path = tmp_path / "bad.dblx"
        path.write_text("DBLX 1 dblcat X\nOBJECTS: 0\n", encoding="utf-8")

        code, _, err = run(capsys, "check", "cofibrant", str(path))

        assert code == EXIT_ERROR
        assert "missing END (line 3" in err

    def test_deterministic_json(self, capsys):
        """Test that two runs print byte-identical reports."""
        argv = ("check", "biequivalence", "I5", "--json", "--seed", "7")

        first = run(capsys, *argv)
        second = run(capsys, *argv)

        assert first == second
        assert json.loads(first[1])["seed"] == 7

    def test_timing(self, capsys):
        """Test that timing is reported only on request."""
        _, out, _ = run(capsys, "check", "globular", "One", "--json", "--timing")

        assert json.loads(out)["timing"] >= 0


@pytest.mark.integration
class TestConstruct:
    """Test cases for ``dblhatch construct``."""

    def test_vertical_morphisms(self, capsys):
        """Test that 𝒱𝕍𝟚 is printed as a 2-category with three objects."""
        code, out, _ = run(capsys, "construct", "V", "TwoV")
        V = parse_dblx(out)

        assert code == EXIT_PASS
        assert isinstance(V, TwoCategory)
        assert len(V.objects) == 3

    def test_product(self, capsys, tmp_path):
        """Test that -o writes the single result to the given file."""
        path = tmp_path / "prod.dblx"

        code, out, _ = run(capsys, "construct", "prod", "TwoH", "TwoV", "-o", str(path))

        assert code == EXIT_PASS
        assert out == ""
        assert len(parse_dblx(path.read_text(encoding="utf-8")).squares) == 9

    def test_strictify_writes_result_and_unit(self, capsys, tmp_path):
        """Test that strictification writes the strict double category and the unit."""
        out_dir = tmp_path / "s"

        code, _, _ = run(capsys, "construct", "strictify", "W", "-o", str(out_dir))

        assert code == EXIT_PASS
        assert sorted(p.name for p in out_dir.iterdir()) == ["result.dblx", "unit.dblx"]
        assert isinstance(parse_dblx((out_dir / "unit.dblx").read_text(encoding="utf-8")), DoubleFunctor)

    def test_hom_from_point(self, capsys, square):
        """Test that [𝟙, 𝕊] is printed and is isomorphic to 𝕊."""
        code, out, _ = run(capsys, "construct", "hom", "One", "Sq")

        assert code == EXIT_PASS
        assert are_isomorphic(parse_dblx(out), square)

    def test_arity(self, capsys):
        """Test that a binary construction needs two inputs."""
        code, _, err = run(capsys, "construct", "prod", "TwoH")

        assert code == EXIT_ERROR
        assert "PreconditionFailed: arity" in err

    def test_budget_exceeded(self, capsys):
        """Test that a search over its budget exits with code 2 and reports the nodes visited."""
        code, out, err = run(capsys, "construct", "hom", "Sq", "Sq", "--budget", "1", "--json")
        report = json.loads(out)

        assert code == EXIT_ERROR
        assert "budget of 1 nodes exceeded" in err
        assert report["budget"] == 1
        assert report["notes"][0].startswith("visited ")
        assert report["notes"][0].endswith("of 1 search nodes")


@pytest.mark.integration
class TestWhitehead:
    """Test cases for ``dblhatch whitehead``."""

    def test_identity(self, capsys):
        """Test that the identity of 𝕊 gets a verified pseudo inverse."""
        code, out, _ = run(capsys, "whitehead", "idS")

        assert code == EXIT_PASS
        assert "DBLX 1 pseudofunctor G_idS" in out
        assert "verified: pass" in out

    def test_writes_three_documents(self, capsys, tmp_path):
        """Test that -o receives the inverse, the unit and the counit."""
        out_dir = tmp_path / "w"

        code, _, _ = run(capsys, "whitehead", "IsoCollapse", "-o", str(out_dir))

        assert code == EXIT_PASS
        assert sorted(p.name for p in out_dir.iterdir()) == ["G.dblx", "epsilon.dblx", "eta.dblx"]
        G = parse_dblx((out_dir / "G.dblx").read_text(encoding="utf-8"))
        assert G.name == "G_IsoCollapse"
        assert isinstance(G, HorizontallyPseudoDoubleFunctor)

    def test_fold_fails_db3(self, capsys):
        """Test that the fold 𝟙⊔𝟙 -> 𝕍𝟚 is rejected with PreconditionFailed: db3."""
        code, _, err = run(capsys, "whitehead", "epsilonV2.dblx")

        assert code == EXIT_ERROR
        assert "PreconditionFailed: db3" in err

    def test_budget_from_search(self, capsys, mocker):
        """Test that BudgetExceeded raised inside the construction is reported."""
        mocker.patch("dblhatch.cli.commands.whitehead_inverse", side_effect=BudgetExceeded(5, 6))

        code, out, _ = run(capsys, "whitehead", "idS", "--json")

        assert code == EXIT_ERROR
        assert json.loads(out)["notes"] == ["visited 6 of 5 search nodes"]


@pytest.mark.integration
class TestLift:
    """Test cases for ``dblhatch lift``."""

    def test_lift_exists(self, capsys, tmp_path, empty, one, square):
        """Test that a point lifts through the identity of 𝕊."""
        top, bottom = tmp_path / "top.dblx", tmp_path / "bottom.dblx"
        top.write_text(emit_dblx(initial_functor(empty, square)), encoding="utf-8")
        bottom.write_text(emit_dblx(constant_functor(one, square, "2")), encoding="utf-8")

        code, out, _ = run(capsys, "lift", "I1", "idS", str(top), str(bottom))

        assert code == EXIT_PASS
        assert parse_dblx(out).objects == {"0": "2"}

    def test_lift_against_i5(self, capsys, tmp_path):
        """Test that 𝕊 lifts through I5 onto one of the parallel squares."""
        boundary = corpus_entry("dSq")
        names = {
            "ob": {x: x for x in boundary.objects},
            "h": {a: a for a in boundary.hmors},
            "v": {u: u for u in boundary.vmors},
        }
        top = tmp_path / "top.dblx"
        top.write_text(emit_dblx(pinned_functor(boundary, corpus_entry("Sq2"), "top", names)), encoding="utf-8")

        code, out, _ = run(capsys, "lift", "I4", "I5", str(top), "id")

        assert code == EXIT_PASS
        assert parse_dblx(out).squares["alpha"] in {"alpha0", "alpha1"}

    def test_no_lift_through_fold(self, capsys, tmp_path, empty, one_one):
        """Test that u cannot be lifted through 𝟙⊔𝟙 -> 𝕍𝟚."""
        top = tmp_path / "top.dblx"
        top.write_text(emit_dblx(initial_functor(empty, one_one)), encoding="utf-8")

        code, out, _ = run(capsys, "lift", "I3", "epsilonV2", str(top), "id")

        assert code == EXIT_FAIL
        assert out.startswith("none")
        assert "lift: fail" in out


@pytest.mark.integration
class TestCorpus:
    """Test cases for ``dblhatch corpus``."""

    def test_list(self, capsys):
        """Test that every builtin name is listed."""
        code, out, _ = run(capsys, "corpus", "list")

        assert code == EXIT_PASS
        assert {"Sq2", "J2", "W", "Cinv", "epsilonV2"} <= set(out.split())

    @pytest.mark.parametrize("name", ["Sq2", "J2"])
    def test_export(self, capsys, name):
        """Test that an exported entry parses back to the builtin object."""
        code, out, _ = run(capsys, "corpus", "export", name)

        assert code == EXIT_PASS
        assert parse_dblx(out).model_dump() == corpus_entry(name).model_dump()

    def test_export_needs_name(self, capsys):
        """Test that export without a name is an input error."""
        code, _, _ = run(capsys, "corpus", "export")

        assert code == EXIT_ERROR
