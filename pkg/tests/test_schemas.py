"""Every published JSON schema validates the live CLI output it describes."""

import io
import json
from pathlib import Path

import pytest

jsonschema = pytest.importorskip("jsonschema")

from betadix.cli import ExperimentManifest, run


SCHEMA_DIR = Path(__file__).resolve().parent.parent / "docs" / "schema"


def _schema(name):
    return json.loads((SCHEMA_DIR / name).read_text())


def _payload(man, expect=0):
    out, err = io.StringIO(), io.StringIO()
    code = run(man, stdout=out, stderr=err)
    assert code == expect, err.getvalue()
    return json.loads(out.getvalue() if expect == 0 else err.getvalue())


def test_all_schemas_are_valid_json_schema():
    validator = jsonschema.validators.validator_for({})
    for path in sorted(SCHEMA_DIR.glob("*.schema.json")):
        schema = json.loads(path.read_text())
        validator.check_schema(schema)
    assert len(list(SCHEMA_DIR.glob("*.schema.json"))) == 9


def test_manifest_schema():
    schema = _schema("manifest.schema.json")
    manifests = [
        ExperimentManifest(command="expand", beta="2", digits="0,3", value="1", k=8),
        ExperimentManifest(command="count", alpha="2", beta="3", b=2, N=100),
        ExperimentManifest(command="gap-check", alpha="2", beta="3", k=2,
                           sample=10, nmax=50, seed=3),
    ]
    for m in manifests:
        jsonschema.validate(json.loads(m.render()), schema)


def test_expand_reports_match_schema():
    schema = _schema("expand-report.schema.json")
    jsonschema.validate(
        _payload(ExperimentManifest(command="expand", beta="2", digits="0,3",
                                    value="1", k=8)),
        schema,
    )
    jsonschema.validate(
        _payload(ExperimentManifest(command="expand", ring="x^2+1",
                                    beta="-1+i", value="3+2i")),
        schema,
    )
    jsonschema.validate(
        _payload(ExperimentManifest(command="expand", beta="-2", value="7",
                                    expansion_mode="radix-only")),
        schema,
    )
    jsonschema.validate(
        _payload(ExperimentManifest(command="expand", beta="2", value="-1",
                                    expansion_mode="radix-only")),
        schema,
    )


def test_cns_reports_match_schema(tmp_path):
    schema = _schema("cns-report.schema.json")
    for beta in ("-1+i", "1+i"):
        jsonschema.validate(
            _payload(ExperimentManifest(command="cns-check", ring="x^2+1",
                                        beta=beta)),
            schema,
        )


def test_count_reports_match_schema(tmp_path):
    schema = _schema("count-report.schema.json")
    jsonschema.validate(
        _payload(ExperimentManifest(command="count", alpha="2", beta="3",
                                    b=2, N=200)),
        schema,
    )
    out_file = tmp_path / "r.csv"
    jsonschema.validate(
        _payload(ExperimentManifest(command="bound-report", alpha="2",
                                    beta="3", b=1, N=50, out=str(out_file))),
        schema,
    )
    jsonschema.validate(
        _payload(ExperimentManifest(command="count", ring="x^2+1", alpha="3",
                                    beta="-1+i", b=1, N=20,
                                    expansion_mode="beta-adic",
                                    mode="exploration")),
        schema,
    )


def test_interpolate_report_matches_schema():
    jsonschema.validate(
        _payload(ExperimentManifest(command="interpolate", alpha="2",
                                    beta="3", l=1, x=4, K=16)),
        _schema("interpolate-report.schema.json"),
    )


def test_gap_report_matches_schema():
    schema = _schema("gap-report.schema.json")
    jsonschema.validate(
        _payload(ExperimentManifest(command="gap-check", alpha="2", beta="3",
                                    k=2, nmax=40)),
        schema,
    )
    jsonschema.validate(
        _payload(ExperimentManifest(command="gap-check", alpha="2", beta="3",
                                    k=0, nmax=10)),
        schema,
    )


def test_persistence_report_matches_schema():
    schema = _schema("persistence-report.schema.json")
    jsonschema.validate(
        _payload(ExperimentManifest(command="persistence", n=39)), schema
    )
    jsonschema.validate(
        _payload(ExperimentManifest(command="persistence", upto=40, base=9)),
        schema,
    )


def test_practical_report_matches_schema():
    schema = _schema("practical-report.schema.json")
    for n, central in ((12, False), (4, True), (1, True), (70, True)):
        jsonschema.validate(
            _payload(ExperimentManifest(command="practical", n=n,
                                        central=central)),
            schema,
        )


def test_error_envelope_matches_schema():
    schema = _schema("error.schema.json")
    err = _payload(
        ExperimentManifest(command="cns-check", ring="x^2+1", beta="2"),
        expect=2,
    )
    jsonschema.validate(err, schema)
    err = _payload(
        ExperimentManifest(command="interpolate", alpha="2", beta="3",
                           l=99, x=1),
        expect=1,
    )
    jsonschema.validate(err, schema)
