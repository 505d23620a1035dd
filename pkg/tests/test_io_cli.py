import json
import os

import pytest

from bihom.algebra_core import example_family
from bihom.errors import BadScalar, DimensionMismatch, ParseError
from bihom.fixtures import (
    cyclic_group_bialgebra,
    cyclic_power_map,
    cyclic_self_action,
    kc4_twisted_bialgebra,
)
from bihom.io_cli import main, parse_structure, serialize_structure
from bihom.linalg import Matrix

FIXDIR = os.path.join(os.path.dirname(__file__), "..", "fixtures")


def fixture_path(name):
    return os.path.join(FIXDIR, name)


class TestParseSerialize:
    def test_family1_fixture_matches_builder(self):
        with open(fixture_path("family1.json")) as fh:
            kind, value = parse_structure(fh.read())
        assert kind == "algebra"
        expect = example_family(1, 3, 2)
        assert value.mu == expect.mu
        assert value.alpha == expect.alpha and value.beta == expect.beta
        assert value.unit == expect.unit

    def test_dimension_mismatch(self):
        obj = json.loads(serialize_structure(example_family(1, 3, 2), "algebra"))
        obj["alpha"][0].append("0")
        with pytest.raises(DimensionMismatch):
            parse_structure(json.dumps(obj))

    def test_bad_scalar(self):
        obj = json.loads(serialize_structure(example_family(1, 3, 2), "algebra"))
        obj["alpha"][0][0] = "3/4/5"
        with pytest.raises(BadScalar):
            parse_structure(json.dumps(obj))

    def test_unknown_kind(self):
        with pytest.raises(ParseError):
            parse_structure('{"format": 1, "kind": "frobenius", "field": "Q"}')

    def test_round_trip_all_kinds(self):
        from bihom.algebra_core import LeftModule
        from bihom.bialgebra import ModuleAlgebraAction
        from bihom.coalgebra import regular_comodule
        from bihom.exactnum import QQ

        H = kc4_twisted_bialgebra()
        mod = LeftModule(
            dim=4,
            action=H.mu,
            alphaM=H.alpha.copy(),
            betaM=H.beta.copy(),
        )
        values = [
            ("algebra", example_family(1, 3, 2)),
            ("coalgebra", H.coalgebra_part()),
            ("bialgebra", H),
            ("lie", __import__("bihom.lie", fromlist=["commutator_lie"]).commutator_lie(
                example_family(1, 3, 2)
            )),
            ("module", mod),
            ("comodule", regular_comodule(H.coalgebra_part())),
            ("action", (H.algebra_part(), ModuleAlgebraAction(action=cyclic_self_action(4, 3).action))),
            ("map", cyclic_power_map(4, 3)),
        ]
        for kind, value in values:
            text = serialize_structure(value, kind)
            k2, v2 = parse_structure(text)
            assert k2 == kind
            assert serialize_structure(v2, k2) == text

    def test_qq_field_round_trip(self):
        from bihom.exactnum import QQ_Q, RationalFunction as RF

        m = Matrix(
            QQ_Q,
            [
                [RF.q_power(2) - RF.q_power(-1), QQ_Q.one()],
                [QQ_Q.zero(), QQ_Q.one() / (RF.q_power(1) + 1)],
            ],
        )
        text = serialize_structure(m, "map")
        kind, back = parse_structure(text)
        assert back == m

    def test_fp_field_round_trip(self):
        from bihom.fixtures import f2_restricted_line

        H = f2_restricted_line()
        text = serialize_structure(H, "bialgebra")
        kind, back = parse_structure(text)
        assert back.same_tensors(H)


class TestCli:
    def test_check_family1(self, capsys):
        assert main(["check", fixture_path("family1.json")]) == 0
        out = capsys.readouterr().out
        assert "ALL PASS" in out

    def test_check_failure_exit_code(self, tmp_path, capsys):
        obj = json.loads(serialize_structure(example_family(1, 3, 2), "algebra"))
        obj["mu"][1][0] = ["0", "1"]
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps(obj))
        assert main(["check", str(bad)]) == 1
        out = capsys.readouterr().out
        assert "FAIL" in out and "bihom_associativity" in out

    def test_usage_error_exit_code(self, tmp_path):
        missing = tmp_path / "nope.json"
        assert main(["check", str(missing)]) == 2

    def test_smash_then_check(self, tmp_path, capsys):
        out = tmp_path / "smash.json"
        rc = main(
            [
                "smash",
                fixture_path("kc4_bialg.json"),
                fixture_path("kc4_selfmod.json"),
                "--out",
                str(out),
            ]
        )
        assert rc == 0
        assert main(["check", str(out)]) == 0

    def test_twist_untwist_round_trip(self, tmp_path, capsys):
        from bihom.io_cli import serialize_structure as ser
        from bihom.fixtures import cyclic_group_bialgebra

        alg = cyclic_group_bialgebra(4).algebra_part()
        src = tmp_path / "kc4_alg.json"
        src.write_text(ser(alg, "algebra"))
        twisted = tmp_path / "twisted.json"
        rc = main(
            [
                "twist",
                str(src),
                "--alpha",
                fixture_path("kc4_g3_map.json"),
                "--beta",
                fixture_path("id4_map.json"),
                "--out",
                str(twisted),
            ]
        )
        assert rc == 0
        back = tmp_path / "back.json"
        assert main(["untwist", str(twisted), "--out", str(back)]) == 0
        _, restored = parse_structure(back.read_text())
        assert restored.mu == alg.mu

    def test_dual_and_lie(self, tmp_path):
        dual = tmp_path / "dual.json"
        assert main(["dual", fixture_path("family1.json"), "--out", str(dual)]) == 0
        assert main(["check", str(dual)]) == 0
        lie_out = tmp_path / "lie.json"
        assert main(["lie", fixture_path("family1.json"), "--out", str(lie_out)]) == 0
        assert main(["check", str(lie_out)]) == 0

    def test_tensor(self, tmp_path):
        out = tmp_path / "tensor.json"
        rc = main(
            [
                "tensor",
                fixture_path("family1.json"),
                fixture_path("family1.json"),
                "--out",
                str(out),
            ]
        )
        assert rc == 0
        _, value = parse_structure(out.read_text())
        assert value.dim == 4

    def test_primitives(self, capsys, tmp_path):
        from bihom.fixtures import f2_restricted_line

        p = tmp_path / "f2.json"
        p.write_text(serialize_structure(f2_restricted_line(), "bialgebra"))
        assert main(["primitives", str(p)]) == 0
        out = capsys.readouterr().out
        assert "dimension: 1" in out

    def test_antipode_solve_and_verify(self, tmp_path, capsys):
        from bihom.bialgebra import hopf_to_monoidal
        from bihom.fixtures import cyclic_antipode
        from bihom.exactnum import QQ

        H = cyclic_group_bialgebra(4)
        Hm, S = hopf_to_monoidal(
            H, cyclic_antipode(4), cyclic_power_map(4, 3), Matrix.identity(QQ, 4)
        )
        hf = tmp_path / "monoidal.json"
        hf.write_text(serialize_structure(Hm, "bialgebra"))
        sf = tmp_path / "s.json"
        assert main(["antipode", "solve", str(hf), "--out", str(sf)]) == 0
        _, solved = parse_structure(sf.read_text())
        assert solved == S
        assert main(["antipode", "verify", str(hf), "--s", str(sf)]) == 0

    def test_antipode_solve_inconsistent(self, tmp_path, capsys):
        from bihom.fixtures import idempotent_monoid_bialgebra

        hf = tmp_path / "monoid.json"
        hf.write_text(serialize_structure(idempotent_monoid_bialgebra(), "bialgebra"))
        assert main(["antipode", "solve", str(hf)]) == 1
        assert "no antipode" in capsys.readouterr().out

    def test_pseudotwistor_apply_canonical(self, tmp_path):
        from bihom.fixtures import cyclic_group_bialgebra

        alg = cyclic_group_bialgebra(4).algebra_part()
        src = tmp_path / "alg.json"
        src.write_text(serialize_structure(alg, "algebra"))
        out = tmp_path / "deformed.json"
        rc = main(
            [
                "pseudotwistor",
                "apply",
                str(src),
                "--canonical",
                "--alpha2",
                fixture_path("kc4_g3_map.json"),
                "--beta2",
                fixture_path("id4_map.json"),
                "--out",
                str(out),
            ]
        )
        assert rc == 0
        assert main(["check", str(out)]) == 0

    def test_ttp_flip(self, tmp_path):
        from bihom.twisting import flip_map
        from bihom.fixtures import cyclic_group_bialgebra

        alg = cyclic_group_bialgebra(2).algebra_part()
        src = tmp_path / "alg.json"
        src.write_text(serialize_structure(alg, "algebra"))
        rfile = tmp_path / "r.json"
        rfile.write_text(serialize_structure(flip_map(alg, alg).R, "map"))
        out = tmp_path / "ttp.json"
        rc = main(["ttp", str(src), str(src), "--r", str(rfile), "--out", str(out)])
        assert rc == 0
        assert main(["check", str(out)]) == 0

    def test_demo_uqsl2(self, capsys):
        rc = main(
            [
                "demo",
                "uqsl2",
                "--grid",
                "2",
                "--lambda1",
                "2",
                "--lambda2",
                "3",
                "--xi",
                "1/2",
            ]
        )
        assert rc == 0
        out = capsys.readouterr().out
        assert "all match" in out

    def test_check_module_with_over(self, tmp_path):
        from bihom.algebra_core import LeftModule

        with open(fixture_path("family1.json")) as fh:
            _, alg = parse_structure(fh.read())
        mod = LeftModule(dim=2, action=alg.mu, alphaM=alg.alpha, betaM=alg.beta)
        mf = tmp_path / "mod.json"
        mf.write_text(serialize_structure(mod, "module"))
        assert main(["check", str(mf), "--over", fixture_path("family1.json")]) == 0
        # missing --over is a usage error
        assert main(["check", str(mf)]) == 2

    def test_check_comodule_with_over(self, tmp_path):
        from bihom.coalgebra import regular_comodule

        H = kc4_twisted_bialgebra()
        cf = tmp_path / "coalg.json"
        cf.write_text(serialize_structure(H.coalgebra_part(), "coalgebra"))
        mf = tmp_path / "comod.json"
        mf.write_text(
            serialize_structure(regular_comodule(H.coalgebra_part()), "comodule")
        )
        assert main(["check", str(mf), "--over", str(cf)]) == 0

    def test_check_action_with_over(self):
        assert (
            main(
                [
                    "check",
                    fixture_path("kc4_selfmod.json"),
                    "--over",
                    fixture_path("kc4_bialg.json"),
                ]
            )
            == 0
        )

    def test_field_flag_mismatch(self, capsys):
        rc = main(["--field", "Q(q)", "check", fixture_path("family1.json")])
        assert rc == 2

    def test_verbose_and_witness_limit(self, capsys, tmp_path):
        obj = json.loads(serialize_structure(example_family(1, 3, 2), "algebra"))
        obj["mu"][1][0] = ["0", "1"]
        obj["alpha"][0][0] = "2"
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps(obj))
        assert main(["--witness-limit", "0", "check", str(bad)]) == 1
        out = capsys.readouterr().out
        assert "@" not in out  # witnesses suppressed
        assert main(["--verbose", "check", fixture_path("family1.json")]) == 0
        out = capsys.readouterr().out
        assert "PASS bihom_associativity" in out


class TestFixtureFilesStayValid:
    def test_all_committed_fixtures_parse_and_pass(self):
        for name in os.listdir(FIXDIR):
            path = fixture_path(name)
            with open(path) as fh:
                kind, value = parse_structure(fh.read())
            if kind == "algebra":
                from bihom.algebra_core import check_bihom_algebra

                assert check_bihom_algebra(value).ok, name
            elif kind == "bialgebra":
                from bihom.bialgebra import check_bihom_bialgebra

                assert check_bihom_bialgebra(value).ok, name

    def test_selfmod_fixture_is_module_algebra(self):
        from bihom.bialgebra import check_module_bihom_algebra

        with open(fixture_path("kc4_bialg.json")) as fh:
            _, H = parse_structure(fh.read())
        with open(fixture_path("kc4_selfmod.json")) as fh:
            _, (A, act) = parse_structure(fh.read())
        assert check_module_bihom_algebra(H, A, act).ok
