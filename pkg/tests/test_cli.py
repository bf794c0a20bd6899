import io
import json

import pytest
from hypothesis import given, strategies as st

from layext import jsonio
from layext.cli import main
from layext.errors import ParseError


def run(args, tmp_path=None):
    out, err = io.StringIO(), io.StringIO()
    rc = main(args, out=out, err=err)
    return rc, out.getvalue(), err.getvalue()


def write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(json.dumps(doc), encoding="utf-8")
    return str(p)


PRES_SIXTHS = {"base": ["1"], "generators": [{"num": "1/2"}, {"num": "1/3"}]}
PRES_FREE = {"base": ["1"], "generators": [{"sym": "g"}]}
GEN_SQRT2 = {"m": {"2": "1", "0": "-2"}, "interval": ["1", "2"]}
DESC_BASE = {"sort": {"kind": "base"}, "value": {"base": ["1"], "generators": []}}
LPOLY = [
    {"layer": "1", "value": "0", "exp": 0},
    {"layer": "1", "value": "0", "exp": 1},
    {"layer": "1", "value": "0", "exp": 2},
]
SCALAR_3_0 = {"layer": {"kind": "rational", "value": "3"}, "value": "0"}
SCALAR_SQRT2_HALF = {
    "layer": {"kind": "algebraic", **GEN_SQRT2, "coeffs": ["0", "1"]},
    "value": "1/2",
}


class TestDecompose:
    def test_sixths(self, tmp_path):
        path = write(tmp_path, "p.json", PRES_SIXTHS)
        rc, out, err = run(["--json", "decompose", path])
        assert rc == 0 and not err
        doc = json.loads(out)
        res = doc["result"]
        assert res["free_rank"] == 0
        assert res["torsion_orders"] == [6]
        assert res["rank"] == 6

    def test_free(self, tmp_path):
        path = write(tmp_path, "p.json", PRES_FREE)
        rc, out, _ = run(["--json", "decompose", path])
        res = json.loads(out)["result"]
        assert res["free_rank"] == 1
        assert res["torsion_orders"] == []
        assert res["rank"] == "infinite"

    def test_malformed_json(self, tmp_path):
        p = tmp_path / "bad.json"
        p.write_text('{"base": [', encoding="utf-8")
        rc, out, err = run(["decompose", str(p)])
        assert rc == 1
        assert "ParseError" in err and "column" in err

    def test_inconsistent_relations_forwarded(self, tmp_path):
        doc = {
            "base": ["1"],
            "generators": [{"num": "1/3"}, {"sym": "g"}],
            "relations": [{"exps": [1, 1], "beta": "0"}, {"exps": [2, 2], "beta": "1"}],
        }
        rc, _, err = run(["decompose", write(tmp_path, "p.json", doc)])
        assert rc == 1 and "InconsistentRelations" in err


class TestEval:
    def test_layer_13(self, tmp_path):
        poly = write(tmp_path, "f.json", LPOLY)
        scalar = write(tmp_path, "a.json", SCALAR_3_0)
        rc, out, _ = run(["--json", "eval", poly, scalar])
        res = json.loads(out)["result"]
        assert res == {"layer": "13", "value": "0", "essential": [0, 1, 2], "rendered": "[13]0"}

    def test_constant(self, tmp_path):
        poly = write(tmp_path, "f.json", [{"layer": "2", "value": "5", "exp": 0}])
        scalar = write(tmp_path, "a.json", SCALAR_3_0)
        rc, out, _ = run(["--json", "eval", poly, scalar])
        res = json.loads(out)["result"]
        assert (res["layer"], res["value"]) == ("2", "5")

    def test_symbolic_scalar_mismatch(self, tmp_path):
        poly = write(tmp_path, "f.json", LPOLY)
        scalar = write(tmp_path, "a.json", {"layer": "3", "value": {"sym": "w"}})
        rc, _, err = run(["eval", poly, scalar])
        assert rc == 1 and "DescriptorMismatch" in err


class TestClosure:
    def test_sqrt2_half(self, tmp_path):
        desc = write(tmp_path, "d.json", DESC_BASE)
        scalar = write(tmp_path, "a.json", SCALAR_SQRT2_HALF)
        rc, out, _ = run(["--json", "closure", desc, scalar])
        res = json.loads(out)["result"]
        assert res["descriptor"]["sort"]["kind"] == "algebraic"
        assert res["descriptor"]["value"]["generators"] == [{"num": "1/2"}]
        assert res["layerset_semiring"] is False
        # the emitted descriptor re-parses
        jsonio.parse_descriptor(res["descriptor"])


class TestKernel:
    def test_member(self, tmp_path):
        a = write(tmp_path, "a.json", {"poly": {"2": "1"}})
        b = write(tmp_path, "b.json", {"poly": {"0": "2"}})
        g = write(tmp_path, "g.json", GEN_SQRT2)
        rc, out, _ = run(["--json", "kernel", a, b, g])
        assert json.loads(out)["result"] == {"in_kernel": True}

    def test_non_member(self, tmp_path):
        a = write(tmp_path, "a.json", {"poly": {"1": "1"}})
        b = write(tmp_path, "b.json", {"poly": {"0": "1"}})
        g = write(tmp_path, "g.json", GEN_SQRT2)
        rc, out, _ = run(["--json", "kernel", a, b, g])
        assert json.loads(out)["result"] == {"in_kernel": False}


class TestSemifield:
    def test_base(self, tmp_path):
        rc, out, _ = run(["--json", "semifield", write(tmp_path, "d.json", DESC_BASE)])
        assert json.loads(out)["result"]["semifield"] is True

    def test_free_value_part(self, tmp_path):
        doc = {"sort": {"kind": "base"}, "value": PRES_FREE}
        rc, out, _ = run(["--json", "semifield", write(tmp_path, "d.json", doc)])
        assert json.loads(out)["result"]["semifield"] is False


class TestDegreeAndRank:
    def test_torsion_degree(self, tmp_path):
        p = write(tmp_path, "p.json", PRES_SIXTHS)
        rc, out, _ = run(["--json", "torsion-degree", p, "--exps", "1,1"])
        assert json.loads(out)["result"] == {"degree": 6}

    def test_degree_infinite(self, tmp_path):
        p = write(tmp_path, "p.json", PRES_FREE)
        rc, out, _ = run(["--json", "torsion-degree", p, "--exps", "1"])
        assert json.loads(out)["result"] == {"degree": "infinite"}

    def test_rank(self, tmp_path):
        p = write(tmp_path, "p.json", PRES_SIXTHS)
        rc, out, _ = run(["--json", "rank", p])
        assert json.loads(out)["result"] == {"rank": 6}
        rc, out, _ = run(["--json", "rank", p, "--over", "0"])
        assert json.loads(out)["result"] == {"rank": 3}

    def test_rank_bad_indices(self, tmp_path):
        p = write(tmp_path, "p.json", PRES_SIXTHS)
        rc, _, err = run(["rank", p, "--over", "5"])
        assert rc == 1 and "ParseError" in err


class TestOutputContract:
    def test_deterministic_bytes(self, tmp_path):
        p = write(tmp_path, "p.json", PRES_SIXTHS)
        runs = [run(["--json", "--notes", "decompose", p]) for _ in range(2)]
        assert runs[0] == runs[1]
        assert runs[0][0] == 0

    def test_notes_flag(self, tmp_path):
        p = write(tmp_path, "p.json", PRES_SIXTHS)
        _, with_notes, _ = run(["--json", "--notes", "decompose", p])
        _, without, _ = run(["--json", "decompose", p])
        assert "notes" in json.loads(with_notes)
        assert "notes" not in json.loads(without)

    def test_human_output_lists_fields(self, tmp_path):
        p = write(tmp_path, "p.json", PRES_SIXTHS)
        rc, out, _ = run(["decompose", p])
        assert out.startswith("command: decompose\n")
        assert "free_rank: 0" in out

    def test_report_payload_reparses(self, tmp_path):
        desc = write(tmp_path, "d.json", DESC_BASE)
        scalar = write(tmp_path, "a.json", SCALAR_SQRT2_HALF)
        _, out, _ = run(["--json", "closure", desc, scalar])
        doc = json.loads(out)
        again = json.dumps(doc, sort_keys=True, separators=(", ", ": ")) + "\n"
        assert again == out


class TestJsonRoundTrips:
    def test_presentation(self):
        P = jsonio.parse_presentation(PRES_SIXTHS)
        assert jsonio.parse_presentation(jsonio.render_presentation(P)) == P

    def test_presentation_with_relations(self):
        doc = {
            "base": ["1"],
            "generators": [{"num": "1/2"}, {"sym": "g"}],
            "relations": [{"exps": [0, 2], "beta": "1"}],
            "monoid": True,
        }
        P = jsonio.parse_presentation(doc)
        assert jsonio.parse_presentation(jsonio.render_presentation(P)) == P

    def test_generator(self):
        g = jsonio.parse_generator(GEN_SQRT2)
        assert jsonio.parse_generator(jsonio.render_generator(g)) == g

    def test_descriptor(self):
        for doc in [
            DESC_BASE,
            {"sort": {"kind": "algebraic", **GEN_SQRT2}, "value": PRES_SIXTHS},
            {"sort": {"kind": "free", "name": "y", "fractions": False}, "value": PRES_FREE},
        ]:
            H = jsonio.parse_descriptor(doc)
            assert jsonio.parse_descriptor(jsonio.render_descriptor(H)) == H

    def test_layered_poly(self):
        f = jsonio.parse_layered_poly(LPOLY)
        assert jsonio.parse_layered_poly(jsonio.render_layered_poly(f)) == f

    def test_scalar(self):
        for doc in [
            SCALAR_3_0,
            SCALAR_SQRT2_HALF,
            {"layer": {"kind": "free", "name": "y", "poly": {"1": "1"}}, "value": {"sym": "w"}},
        ]:
            a = jsonio.parse_scalar(doc)
            assert jsonio.parse_scalar(jsonio.render_scalar(a)) == a

    def test_bad_inputs_raise_parse_error(self):
        for fn, doc in [
            (jsonio.parse_presentation, {"generators": [{"zzz": 1}]}),
            (jsonio.parse_presentation, {"generators": [{"num": "x"}]}),
            (jsonio.parse_generator, {"m": {"2": "1"}}),
            (jsonio.parse_descriptor, {"sort": {"kind": "wat"}, "value": {}}),
            (jsonio.parse_layered_poly, []),
            (jsonio.parse_scalar, {"layer": {"kind": "?"}, "value": "0"}),
            (jsonio.parse_pos_poly, {"poly": {"2": "-1"}}),
        ]:
            with pytest.raises(ParseError):
                fn(doc)

    @given(st.integers(-40, 40), st.integers(1, 12))
    def test_rational_round_trip(self, num, den):
        from fractions import Fraction

        q = Fraction(num, den)
        assert jsonio.parse_rational(jsonio.render_rational(q)) == q

    @given(st.data())
    def test_random_presentations_round_trip(self, data):
        from fractions import Fraction

        from layext.bipotent import BipotentPresentation, Numeric, Symbolic
        from layext.tropical import ValueLattice

        n = data.draw(st.integers(1, 4))
        gens = []
        for i in range(n):
            if data.draw(st.booleans()):
                gens.append(Numeric(Fraction(data.draw(st.integers(1, 9)), data.draw(st.integers(1, 6)))))
            else:
                gens.append(Symbolic(f"s{i}"))
        P = BipotentPresentation(
            ValueLattice.of(Fraction(data.draw(st.integers(1, 4)))),
            tuple(gens),
            (),
            data.draw(st.booleans()),
        )
        assert jsonio.parse_presentation(jsonio.render_presentation(P)) == P


def test_schema_samples_parse():
    import pathlib

    root = pathlib.Path(__file__).resolve().parent.parent / "schemas"
    parsers = {
        "presentation.json": jsonio.parse_presentation,
        "presentation_symbolic.json": jsonio.parse_presentation,
        "generator.json": jsonio.parse_generator,
        "poly_pos.json": jsonio.parse_pos_poly,
        "poly_pos_const.json": jsonio.parse_pos_poly,
        "layered_poly.json": jsonio.parse_layered_poly,
        "scalar.json": jsonio.parse_scalar,
        "scalar_algebraic.json": jsonio.parse_scalar,
        "descriptor.json": jsonio.parse_descriptor,
    }
    for name, parse in parsers.items():
        parse(jsonio.load_document((root / name).read_text(), source=name))


class TestSessionAndStdin:
    def test_stdin_input(self, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(PRES_SIXTHS)))
        rc, out, err = run(["--json", "decompose", "-"])
        assert rc == 0
        assert json.loads(out)["result"]["rank"] == 6

    def test_session_bindings_are_unique(self):
        from layext.cli import Session

        s = Session()
        s.bind("presentation", object())
        with pytest.raises(ValueError):
            s.bind("presentation", object())

    def test_session_records_commands(self, tmp_path):
        from layext.cli import Session

        s = Session()
        s.record("decompose p.json")
        assert s.log == ["decompose p.json"]
