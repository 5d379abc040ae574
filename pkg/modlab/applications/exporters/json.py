import json

from modlab.applications.exporter import ReportExportController, Report


class JsonExportController(ReportExportController):
    def serialize(self, report):
        return json.dumps(report.to_jsonable(), sort_keys=True, indent=2) + '\n'


def parse_report(text):
    return Report.from_jsonable(json.loads(text))


def load_report(path):
    with open(path) as f:
        return parse_report(f.read())
