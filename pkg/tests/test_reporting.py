import csv
import io
import json
import unittest

from characters import DomainError, ValidationError
from reporting import (
    ToolkitConfig,
    canonical_json,
    generate_digest,
    parse_scenario,
    report_to_csv,
    report_to_json,
    run_scenario,
)

EMPTY_OBJECT_SHA256 = "44136fa355b3678a1146ad16f7e8649e94fb4fc21fe77e8310c060f61caaff8a"


class TestConfig(unittest.TestCase):
    def test_defaults(self):
        """Test the documented defaults."""
        config = ToolkitConfig()
        self.assertEqual((config.seed, config.truncation, config.workers), (42, 40, 1))

    def test_invalid_values(self):
        """Test that bad values name the offending key."""
        with self.assertRaises(ValidationError) as ctx:
            ToolkitConfig(workers=0)
        self.assertEqual(ctx.exception.field, "workers")
        with self.assertRaises(ValidationError):
            ToolkitConfig(output_format="xml")

    def test_mapping_overlay(self):
        """Test overlaying a mapping and refusing unknown keys."""
        config = ToolkitConfig.from_mapping({"truncation": 12})
        self.assertEqual(config.truncation, 12)
        self.assertEqual(config.override(seed=None, workers=4).workers, 4)
        with self.assertRaises(ValidationError):
            ToolkitConfig.from_mapping({"bogus": 1})


class TestDigest(unittest.TestCase):
    def test_volatile_keys_ignored(self):
        """Test that wall time and the digest itself do not enter the hash."""
        self.assertEqual(generate_digest({"wall_time": 1.5, "digest": "x"}), EMPTY_OBJECT_SHA256)

    def test_key_order_irrelevant(self):
        """Test that canonical JSON sorts keys."""
        self.assertEqual(canonical_json({"b": 1, "a": 2}), '{"a":2,"b":1}')
        self.assertEqual(generate_digest({"a": 1, "b": 2}), generate_digest({"b": 2, "a": 1}))

    def test_sha1_option(self):
        """Test the SHA-1 variant length."""
        self.assertEqual(len(generate_digest({"verb": "decide"}, algorithm="sha1")), 40)


class TestScenario(unittest.TestCase):
    def test_envelope_validation(self):
        """Test that unknown verbs, bad seeds and bad formats are refused."""
        with self.assertRaises(ValidationError):
            parse_scenario({"verb": "nope"})
        with self.assertRaises(ValidationError):
            parse_scenario({"verb": "decide", "seed": -1})
        with self.assertRaises(ValidationError):
            parse_scenario({"verb": "decide", "output": "xml"})

    def test_decide_report(self):
        """Test the decide verb and the report envelope."""
        scenario = parse_scenario(
            {"verb": "decide", "params": {"field": "R", "n": 3, "p1": 1, "chi": "eps*nu^{5/2}"}}
        )
        report = run_scenario(scenario)
        self.assertTrue(report["outputs"]["reducible"])
        self.assertTrue(report["outputs"]["methods_agree"])
        for key in ("inputs", "config", "versions", "seed", "wall_time", "digest"):
            self.assertIn(key, report)

    def test_chi_pair_is_normalized(self):
        """Test that chi1 x chi2 parameters are twisted to chi x 1."""
        params = {"field": "R", "n": 3, "p1": 1, "chi1": "nu^{3}", "chi2": "eps*nu^{1/2}"}
        report = run_scenario(parse_scenario({"verb": "decide", "params": params}))
        self.assertEqual(report["outputs"]["chi_text"], "eps^1*nu^{5/2}")
        self.assertTrue(report["outputs"]["reducible"])

    def test_digest_reproducible(self):
        """Test that two runs of the same seeded scenario share a digest."""
        data = {"verb": "mc", "params": {"n": 3, "i": 1, "alpha": "1", "N": 5000}, "seed": 17}
        first = run_scenario(parse_scenario(data))
        second = run_scenario(parse_scenario(data))
        self.assertEqual(first["digest"], second["digest"])
        self.assertEqual(first["outputs"]["value"], second["outputs"]["value"])
        self.assertEqual(first["seed"], 17)

    def test_profile_and_infchar(self):
        """Test the profile and infchar verbs."""
        params = {"field": "R", "n": 4, "p1": 2, "chi": "nu^2"}
        profile = run_scenario(parse_scenario({"verb": "profile", "params": params}))["outputs"]
        self.assertEqual(profile["direction"], "DescendingRank")
        self.assertEqual(len(profile["tower"]), 3)
        self.assertEqual(profile["top_orbit"], "2^21^0")
        infchar = run_scenario(parse_scenario({"verb": "infchar", "params": params}))["outputs"]
        self.assertEqual(len(infchar["multisets"]), 1)

    def test_spectrum_and_exceptional(self):
        """Test the spectrum and exceptional verbs."""
        spectrum = run_scenario(parse_scenario({"verb": "spectrum", "params": {"n": 3, "alpha0": "0", "M": 4}}))
        self.assertFalse(spectrum["outputs"]["invertible"])
        exceptional = run_scenario(
            parse_scenario({"verb": "exceptional", "params": {"n": 4, "i": 2, "lo": -6, "hi": 2, "alpha0": -2}})
        )["outputs"]
        self.assertNotIn("-2/1", exceptional["exceptional"])
        self.assertTrue(exceptional["invertibility"]["consistent"])

    def test_ramified_warning_surfaces(self):
        """Test that engine notes reach the report's warnings."""
        params = {"field": "NA", "n": 4, "p1": 2, "chi": "nu^{2}", "ramified": True}
        report = run_scenario(parse_scenario({"verb": "decide", "params": params}))
        self.assertFalse(report["outputs"]["reducible"])
        self.assertTrue(report["warnings"])

    def test_errors_propagate(self):
        """Test that validation and domain errors reach the caller."""
        with self.assertRaises(ValidationError):
            run_scenario(parse_scenario({"verb": "decide", "params": {"n": 3, "p1": 1}}))
        with self.assertRaises(DomainError):
            run_scenario(parse_scenario({"verb": "decide", "params": {"field": "R", "n": 3, "p1": 4}}))
        with self.assertRaises(DomainError):
            run_scenario(parse_scenario({"verb": "mc", "params": {"n": 3, "i": 1, "alpha": -2, "N": 100}}))

    def test_bad_character_names_its_parameter(self):
        """Test that a malformed chi1 or chi2 is reported against that key."""
        for key, text in (("chi2", "foo^3"), ("chi2", "nu^{x}"), ("chi1", "")):
            params = {"field": "R", "n": 3, "p1": 1, "chi1": "nu^{3}", "chi2": "nu^{1/2}", key: text}
            with self.assertRaises(ValidationError) as ctx:
                run_scenario(parse_scenario({"verb": "decide", "params": params}))
            self.assertEqual(ctx.exception.field, key)
            self.assertTrue(str(ctx.exception).startswith(f"{key}: "))


class TestWriters(unittest.TestCase):
    def test_json_is_sorted(self):
        """Test that JSON output is byte-stable."""
        self.assertEqual(report_to_json({"b": 1, "a": 2}), report_to_json({"a": 2, "b": 1}))

    def test_spectrum_csv(self):
        """Test one CSV row per harmonic for spectrum reports."""
        report = run_scenario(parse_scenario({"verb": "spectrum", "params": {"n": 4, "alpha0": 2, "M": 5}}))
        rows = list(csv.DictReader(io.StringIO(report_to_csv(report))))
        self.assertEqual(len(rows), 6)
        self.assertEqual(rows[3]["exact_zero"], "True")

    def test_generic_csv(self):
        """Test key/value rows for other verbs."""
        report = {"verb": "decide", "outputs": {"reducible": True, "notes": []}}
        rows = list(csv.DictReader(io.StringIO(report_to_csv(report))))
        self.assertEqual({r["key"] for r in rows}, {"reducible", "notes"})
        self.assertEqual(json.loads(next(r for r in rows if r["key"] == "notes")["value"]), [])


if __name__ == "__main__":
    unittest.main()
