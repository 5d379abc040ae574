#! /usr/bin/env python3
from modlab.applications.exporter import ReportArgParser
from modlab.applications.exporters.json import load_report
from modlab.applications.exporters.text import TextExportController


def main(args):
    report = load_report(args.report_in)
    TextExportController().write(report, args.out)


if __name__ == "__main__":
    parser = ReportArgParser()
    parser.parse_args()
    main(parser.args)
