from modlab.base import types
from modlab.applications.exporter import ReportExportController

CENSUS_COLUMNS = ['name', 'dim', 'length', 'top', 'socle', types.INJECTIVE, types.QUASI_INJECTIVE,
                  types.PSEUDO_INJECTIVE, types.AUTOMORPHISM_INVARIANT, types.UNIFORM, types.UNISERIAL,
                  types.LOCAL, types.INDECOMPOSABLE]
VERDICT_COLUMNS = ['theorem', 'universe', 'instances_checked', 'status']


def fmt_pair(pair):
    """(1, 2) -> '12', the matrix unit e12; '1.12' once an index has two digits"""
    sep = '' if all(i < 10 for i in pair) else '.'
    return sep.join(str(i) for i in pair)


def is_pair(value):
    return (isinstance(value, list) and len(value) == 2 and
            all(isinstance(i, int) and not isinstance(i, bool) for i in value))


def fmt_value(value):
    if value is None:
        return 'undecided'
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, list):
        if value and all(is_pair(v) for v in value):
            return ','.join(fmt_pair(v) for v in value)
        return ','.join(fmt_value(v) for v in value)
    return str(value)


def fmt_stats(a_dict):
    out = ""
    for key in sorted(a_dict.keys()):
        out += "{}\t{}\n".format(key, fmt_value(a_dict[key]))
    return out


def fmt_table(columns, rows):
    out = "columns\t" + "\t".join(columns) + "\n"
    for row in rows:
        out += "\t".join(fmt_value(row[c]) for c in columns) + "\n"
    return out


class TextExportController(ReportExportController):
    """tab separated sections, one '# title' line before each"""

    def serialize(self, report):
        out = "# modlab {} {}\n".format(report.tool_version, report.command)
        if report.algebra:
            scalars = {k: v for k, v in report.algebra.items() if not isinstance(v, dict)}
            out += "# algebra\n" + fmt_stats(scalars)
            if 'checks' in report.algebra:
                out += "# checks\n" + fmt_stats(report.algebra['checks'])
        for profile in report.profiles:
            out += "# profile {}\n".format(profile['module'])
            out += fmt_stats(profile['flags'])
            out += fmt_stats(profile['numbers'])
            for key in ['socle_labels', 'top_labels', 'hull_blocks']:
                if key in profile:
                    out += "{}\t{}\n".format(key, fmt_value(profile[key]))
            for flag in sorted(profile['witnesses']):
                out += "witness\t{}\t{}\n".format(flag, profile['witnesses'][flag])
        for census in report.censuses:
            out += "# census {}\n".format(census['universe'])
            out += fmt_stats(census['certificate'])
            out += fmt_table(CENSUS_COLUMNS, census['rows'])
        if report.verdicts:
            out += "# verdicts\n" + fmt_table(VERDICT_COLUMNS, report.verdicts)
            for verdict in report.failed_verdicts:
                out += "failed\t{}\t{}\n".format(verdict['theorem'], verdict['witness'])
        if report.cap_exceeded:
            out += "cap_exceeded\ttrue\n"
        for notice in report.notices:
            out += "notice\t{}\n".format(notice)
        if report.timing:
            out += "# timing\n" + fmt_stats(report.timing)
        return out
