from reporting.config import ToolkitConfig
from reporting.digest import canonical_json, generate_digest
from reporting.scenario import VERBS, Scenario, parse_scenario, run_scenario
from reporting.writers import report_to_csv, report_to_json, write_report
