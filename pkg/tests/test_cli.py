import json
import math
import subprocess
import sys

import numpy as np

from framekit import cli, mercedes_frame
from framekit.cli import (
    EXIT_DEGENERATE,
    EXIT_MISSING,
    EXIT_OK,
    EXIT_SCHEMA,
)


def write(path, payload):
    path.write_text(json.dumps(payload), encoding="utf-8")
    return str(path)


def standard_basis_payload():
    return {
        "grid": {"points": [0.0, 1.0], "weights": [1.0, 1.0]},
        "vectors": [[1.0, 0.0], [0.0, 1.0]],
    }


def mercedes_payload():
    fs = mercedes_frame()
    return {
        "grid": {
            "points": list(fs.grid.points),
            "weights": list(fs.grid.weights),
        },
        "vectors": [list(row) for row in fs.vectors],
    }


def onb_model_payload(scale=1.0):
    masses = [0.5, 1.25, 2.0]
    rows = np.diag(1.0 / np.sqrt(masses)) * scale
    return {
        "atoms": [
            {"u": -1.0, "mass": masses[0]},
            {"u": 0.5, "mass": masses[1]},
            {"u": 2.0, "mass": masses[2]},
        ],
        "frame": [list(r) for r in rows],
        "phat": {"re": [0.3, -1.1, 0.25], "im": [0.0, 0.7, -0.4]},
    }


class TestAnalyze:
    def test_standard_basis(self, tmp_path, capsys):
        path = write(tmp_path / "basis.json", standard_basis_payload())
        assert cli.main(["analyze", path]) == EXIT_OK
        out = capsys.readouterr().out
        assert "B1=1 B2=1" in out
        assert "parseval=true" in out

    def test_mercedes(self, tmp_path, capsys):
        path = write(tmp_path / "mercedes.json", mercedes_payload())
        assert cli.main(["analyze", path]) == EXIT_OK
        out = capsys.readouterr().out
        assert "B1=1.5 B2=1.5" in out
        assert "parseval=false" in out
        assert "N=3 M=2 rank=2" in out

    def test_missing_file(self, tmp_path, capsys):
        assert cli.main(["analyze", str(tmp_path / "nope.json")]) == EXIT_MISSING

    def test_malformed_weights(self, tmp_path, capsys):
        payload = standard_basis_payload()
        payload["grid"]["weights"] = [1.0]
        path = write(tmp_path / "bad.json", payload)
        assert cli.main(["analyze", path]) == EXIT_SCHEMA
        assert "grid" in capsys.readouterr().err

    def test_ragged_vectors(self, tmp_path, capsys):
        payload = standard_basis_payload()
        payload["vectors"] = [[1.0, 0.0], [0.0]]
        path = write(tmp_path / "ragged.json", payload)
        assert cli.main(["analyze", path]) == EXIT_SCHEMA
        assert "vectors[1]" in capsys.readouterr().err

    def test_invalid_json(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json", encoding="utf-8")
        assert cli.main(["analyze", str(bad)]) == EXIT_SCHEMA


class TestKernel:
    def test_roundtrip_bit_exact(self, tmp_path, capsys):
        src = write(tmp_path / "m.json", mercedes_payload())
        out_path = tmp_path / "kernel.json"
        assert cli.main(["kernel", src, "--out", str(out_path)]) == EXIT_OK
        matrix, kind, rank_tol = cli.read_kernel_file(str(out_path))
        assert kind == "rkhs"
        assert rank_tol == 1e-10
        from framekit import rk_kernel

        expected = rk_kernel(mercedes_frame()).values
        assert np.array_equal(matrix, expected)

    def test_naive_mercedes(self, tmp_path, capsys):
        src = write(tmp_path / "m.json", mercedes_payload())
        out_path = tmp_path / "naive.json"
        assert cli.main(["kernel", src, "--naive", "--out", str(out_path)]) == EXIT_OK
        matrix, kind, _ = cli.read_kernel_file(str(out_path))
        assert kind == "naive"
        np.testing.assert_allclose(matrix, 1.5 * np.eye(2), atol=1e-15)

    def test_single_vector_hand_values(self, tmp_path, capsys):
        payload = {
            "grid": {"points": [0.0, 1.0, 2.0], "weights": [1.0, 1.0, 1.0]},
            "vectors": [[1.0, 1.0, 0.0]],
        }
        src = write(tmp_path / "one.json", payload)
        out_path = tmp_path / "k.json"
        assert cli.main(["kernel", src, "--out", str(out_path)]) == EXIT_OK
        matrix, _, _ = cli.read_kernel_file(str(out_path))
        expected = np.array([[0.5, 0.5, 0.0], [0.5, 0.5, 0.0], [0.0, 0.0, 0.0]])
        np.testing.assert_allclose(matrix, expected, atol=1e-12)

    def test_zero_span(self, tmp_path, capsys):
        payload = {
            "grid": {"points": [0.0, 1.0], "weights": [1.0, 1.0]},
            "vectors": [[0.0, 0.0]],
        }
        src = write(tmp_path / "zero.json", payload)
        assert cli.main(["kernel", src]) == EXIT_DEGENERATE

    def test_report_line(self, tmp_path, capsys):
        src = write(tmp_path / "m.json", mercedes_payload())
        assert cli.main(["kernel", src]) == EXIT_OK
        out = capsys.readouterr().out
        assert "kind=rkhs" in out
        assert "psd_violation=" in out
        assert "max_reproducing_residual=" in out


class TestHilbert:
    def test_single(self, capsys):
        assert cli.main(["hilbert", "--sizes", "1"]) == EXIT_OK
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[1].startswith("1 1 1 ")

    def test_monotone_below_pi(self, capsys):
        assert cli.main(["hilbert", "--sizes", "4,8,16"]) == EXIT_OK
        lines = capsys.readouterr().out.strip().splitlines()[1:]
        lam = [float(line.split()[1]) for line in lines]
        assert lam == sorted(lam)
        assert all(x < math.pi for x in lam)

    def test_n12_lam_min(self, capsys):
        assert cli.main(["hilbert", "--sizes", "12"]) == EXIT_OK
        line = capsys.readouterr().out.strip().splitlines()[1]
        assert float(line.split()[2]) < 1e-8

    def test_invalid_size(self, capsys):
        assert cli.main(["hilbert", "--sizes", "0"]) == EXIT_SCHEMA
        assert cli.main(["hilbert", "--sizes", "a,b"]) == EXIT_SCHEMA


class TestGpSim:
    def test_onb_equal_columns(self, tmp_path, capsys):
        path = write(tmp_path / "model.json", onb_model_payload())
        assert cli.main(["gp-sim", path, "--samples", "5000", "--seed", "3"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "a=1 b=1" in out
        assert "holds" in out
        ex2 = float(out.split("ex2=")[1].split()[0])
        ey2 = float(out.split("ey2=")[1].split()[0])
        assert abs(ex2 - ey2) <= 1e-9 * max(1.0, ex2)

    def test_scaled_onb(self, tmp_path, capsys):
        path = write(tmp_path / "model.json", onb_model_payload(scale=2.0))
        assert cli.main(["gp-sim", path, "--samples", "2000", "--seed", "1"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "a=4 b=4" in out
        ex2 = float(out.split("ex2=")[1].split()[0])
        ey2 = float(out.split("ey2=")[1].split()[0])
        assert abs(ey2 - 4.0 * ex2) <= 1e-6 * max(1.0, ey2)

    def test_byte_identical_reruns(self, tmp_path, capsys):
        path = write(tmp_path / "model.json", onb_model_payload())
        args = ["gp-sim", path, "--samples", "3000", "--seed", "11"]
        assert cli.main(args) == EXIT_OK
        first = capsys.readouterr().out
        assert cli.main(args) == EXIT_OK
        second = capsys.readouterr().out
        assert first == second

    def test_phi_x_variant(self, tmp_path, capsys):
        payload = onb_model_payload()
        del payload["phat"]
        m = 64
        x = list(-1.0 + (np.arange(m) + 0.5) * (2.0 / m))
        payload["phi_x"] = {
            "grid": {"points": x, "weights": [2.0 / m] * m},
            "values": list(np.exp(-np.array(x) ** 2)),
        }
        path = write(tmp_path / "model.json", payload)
        assert cli.main(["gp-sim", path, "--samples", "2000"]) == EXIT_OK

    def test_requires_exactly_one_profile(self, tmp_path, capsys):
        payload = onb_model_payload()
        payload["phi_x"] = {
            "grid": {"points": [0.0], "weights": [1.0]},
            "values": [1.0],
        }
        path = write(tmp_path / "model.json", payload)
        assert cli.main(["gp-sim", path]) == EXIT_SCHEMA
        del payload["phi_x"]
        del payload["phat"]
        path = write(tmp_path / "model2.json", payload)
        assert cli.main(["gp-sim", path]) == EXIT_SCHEMA

    def test_not_a_frame(self, tmp_path, capsys):
        payload = onb_model_payload()
        payload["frame"] = [[1.0, 0.0, 0.0]]
        path = write(tmp_path / "model.json", payload)
        assert cli.main(["gp-sim", path, "--samples", "10"]) == EXIT_DEGENERATE


class TestCanonicalAndVerify:
    def test_canonical_roundtrip(self, tmp_path, capsys):
        src = write(tmp_path / "m.json", mercedes_payload())
        out_path = tmp_path / "tight.json"
        assert cli.main(["canonical", src, "--out", str(out_path)]) == EXIT_OK
        tight = cli.parse_frame_file(str(out_path))
        expected = math.sqrt(2.0 / 3.0) * mercedes_frame().vectors
        np.testing.assert_allclose(tight.vectors, expected, atol=1e-12)
        out = capsys.readouterr().out
        assert "projector_residual=" in out

    def test_verify_mercedes(self, tmp_path, capsys):
        src = write(tmp_path / "m.json", mercedes_payload())
        assert cli.main(["verify", src]) == EXIT_OK
        out = capsys.readouterr().out
        assert "max_reproducing_residual=" in out
        assert "kernel_vs_tight_max=" in out
        assert "isometry_relative_max=" in out

    def test_verify_ill_conditioned_monomials(self, tmp_path, capsys):
        # Hilbert-type Gramian: retained condition number ~1e10 costs the
        # pseudo-inverse route ~eps*kappa accuracy; the gate widens with it
        from framekit import monomial_frame

        src = tmp_path / "mono.json"
        cli.write_frame_file(str(src), monomial_frame(8, 24))
        assert cli.main(["verify", str(src)]) == EXIT_OK
        out = capsys.readouterr().out
        assert "max_reproducing_residual=" in out

    def test_verify_weighted_frame(self, tmp_path, capsys):
        payload = {
            "grid": {"points": [0.0, 1.0, 2.5], "weights": [0.5, 1.5, 0.75]},
            "vectors": [
                [1.0, 0.25, -0.5],
                [0.0, 1.0, 1.0],
                [0.5, -1.0, 2.0],
                [1.0, 1.0, 1.0],
            ],
        }
        src = write(tmp_path / "w.json", payload)
        assert cli.main(["verify", src]) == EXIT_OK


class TestSerialization:
    def test_dump_json_roundtrip_awkward_floats(self):
        values = [math.pi, 1.0 / 3.0, 1e-300, 123456789.123456789, 2.0**-1074]
        text = cli.dump_json({"matrix": [values]})
        parsed = json.loads(text)
        assert parsed["matrix"][0] == values

    def test_entry_point_runs(self, tmp_path):
        path = write(tmp_path / "m.json", mercedes_payload())
        proc = subprocess.run(
            [sys.executable, "-m", "framekit.cli", "analyze", path],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert "B1=1.5" in proc.stdout
