#! /usr/bin/env python3
import sys

from modlab.applications.exporter import ReportArgParser
from modlab.applications.exporters.json import load_report
from modlab.applications.exporters.text import fmt_table, VERDICT_COLUMNS


class FailedArgParser(ReportArgParser):
    def __init__(self):
        super().__init__()
        self.parser.add_argument('--all', action="store_true",
                                 help="list every verdict, not just the failing ones")


def main(args):
    report = load_report(args.report_in)
    verdicts = report.verdicts if args.all else report.failed_verdicts
    out = fmt_table(VERDICT_COLUMNS + ['witness'], verdicts)
    if args.out is None:
        sys.stdout.write(out)
    else:
        with open(args.out, 'w') as f:
            f.write(out)
    return report.exit_code


if __name__ == "__main__":
    parser = FailedArgParser()
    parser.parse_args()
    sys.exit(main(parser.args))
