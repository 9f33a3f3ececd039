"""
ratfert command line interface classifies rational links, enumerates the
resultants of their shadows, computes fertility numbers and reproduces the
published fertility tables.
"""

import io
import sys
import argparse
import logging

from ratfert import defaults,templates
from ratfert._version import __version__
from ratfert.counting import COUNT_QUERIES,count_query
from ratfert.fertility import (Catalog,FertilityAnalyzer,g,rational_fertility_number,trunk,
                               verify_local_fertility_threshold)
from ratfert.frac_core import check_word,classify,format_word
from ratfert.verification import Verification
from ratfert.resultants import denominator_distribution,resultant_distribution
from ratfert.rewrite import format_trace,normalize
from ratfert.run_configuration import RunConfiguration
from ratfert.utility_functions import dump_json,get_logger,write_csv

logger = logging.getLogger(__name__)

FORMATS = ['text','json','csv']

def class_record(link,catalog,mirror_identified=True):
    """Fields p, q, components, crossing and name of a class."""

    return {'p':link.p,'q':link.q_amphi if mirror_identified else link.q_chiral,'components':link.components,
            'crossing':link.crossing,'name':catalog.name_of(link)}

def format_text(records,fieldnames):
    """Whitespace aligned table with a header line."""

    rows = [[str(record.get(field,'')) for field in fieldnames] for record in records]
    widths = [max([len(field)] + [len(row[i]) for row in rows]) for i,field in enumerate(fieldnames)]

    lines = ['  '.join(field.ljust(width) for field,width in zip(fieldnames,widths)).rstrip()]
    lines += ['  '.join(value.ljust(width) for value,width in zip(row,widths)).rstrip() for row in rows]

    return '\n'.join(lines) + '\n'

def render(records,fieldnames,output_format,single=False):
    """Serialize records; a single JSON record is written as an object."""

    if output_format == 'json':
        ordered = [{field:record[field] for field in fieldnames if field in record} for record in records]
        return dump_json(ordered[0] if single and len(ordered) == 1 else ordered) + '\n'
    elif output_format == 'csv':
        stream = io.StringIO()
        write_csv(records,fieldnames,stream)
        return stream.getvalue()

    return format_text(records,fieldnames)

def command_classify(args,configuration,catalog):
    link = classify(args.word)

    return render([class_record(link,catalog,configuration['mirror_identified'])],templates.classify_record,args.format,single=True)

def command_normalize(args,configuration,catalog):
    form = normalize(args.word)
    record = class_record(form.link_class,catalog,configuration['mirror_identified'])
    record.update({'word':format_word(form.word),'steps':len(form.trace)})

    if args.format == 'text':
        text = format_text([record],[field for field in templates.normalize_record if field != 'trace'])
        if args.trace:
            text += ''.join(line + '\n' for line in format_trace(form.trace))
        return text

    if args.trace:
        record['trace'] = format_trace(form.trace)

    return render([record],templates.normalize_record,args.format,single=True)

def command_resultants(args,configuration,catalog):
    mirror_identified = configuration['mirror_identified']
    distribution = denominator_distribution(args.word) if args.denominator else resultant_distribution(args.word)

    if args.distinct:
        classes = sorted(distribution.distinct(mirror_identified),key=lambda link:(link.crossing,link.p,link.q_chiral))
        records = [class_record(link,catalog,mirror_identified) for link in classes]
        text = render(records,templates.classify_record,args.format)
        if args.format == 'text':
            text += '{} classes\n'.format(len(records))
        return text

    return render(distribution.to_records(catalog,mirror_identified),templates.resultant_record,args.format)

def command_fertility(args,configuration,catalog):
    record = FertilityAnalyzer(catalog,verbosity=configuration['verbosity']).record(args.word)
    if args.format == 'text':
        return '{}\n'.format(record['fertility'])

    return render([record],templates.fertility_record,args.format,single=True)

def command_frn(args,configuration,catalog):
    link = classify(args.word)
    value = rational_fertility_number(args.word,configuration['max_crossing'])
    if args.format == 'text':
        return '{}\n'.format(value)

    record = {'word':format_word(check_word(args.word)),'name':catalog.name_of(link),'components':link.components,
              'crossing':link.crossing,'max_crossing':configuration['max_crossing'],'rational_fertility':value}

    return render([record],templates.rational_fertility_record,args.format,single=True)

def command_trunk(args,configuration,catalog):
    members = trunk(args.length).members
    records = []
    for word in members:
        record = class_record(classify(word),catalog)
        record['word'] = format_word(word)
        records.append(record)

    return render(records,templates.trunk_record,args.format)

def command_g(args,configuration,catalog):
    value = g(args.length,args.components)
    if args.format == 'text':
        return '{}\n'.format(value)

    return render([{'length':args.length,'components':args.components,'g':value}],templates.g_record,args.format,single=True)

def command_counts(args,configuration,catalog):
    return render(count_query(args.query,args.values),templates.count_record,args.format)

def command_table(args,configuration,catalog):
    analyzer = FertilityAnalyzer(catalog,configuration['max_crossing'],verbosity=configuration['verbosity'])

    return render(analyzer.table(args.components),templates.fertility_record,args.format)

def command_local(args,configuration,catalog):
    report = verify_local_fertility_threshold(args.components,args.length)
    records = [{'word':format_word(check.word),'source':check.source,'fertility':check.fertility,
                'status':'PASS' if check.passed else 'FAIL'} for check in report.checks]
    text = render(records,templates.local_record,args.format)
    if args.format == 'text':
        text += '{} of {} passed, {}-fertility required\n'.format(len(records) - len(report.failures),len(records),report.required)

    return text,0 if report.passed else 1

def command_verify_paper(args,configuration,catalog):
    verification = Verification(configuration,verbosity=configuration['verbosity'])
    results = verification.run()

    if args.format == 'text':
        text = '\n'.join(verification.report()) + '\n'
    else:
        text = render([result._asdict() for result in results],templates.verification_record,args.format)

    return text,0 if verification.passed else 1

def word_argument(subparser):
    subparser.add_argument('word',help='word in quotes, e.g. "3 2", or a fraction such as 7/2')

def common_arguments():
    """Flags accepted after every subcommand."""

    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument('--format',choices=FORMATS,default='text',help='output format')
    parser.add_argument('--mirror-distinct',action='store_true',help='keep a class and its mirror image apart')
    parser.add_argument('--max-crossing',type=int,default=None,help='crossing bound for rational fertility numbers and generators')
    parser.add_argument('--catalog',default=None,help='catalog CSV overriding the shipped tables')
    parser.add_argument('--config',default=None,help='JSON file with named run configurations')
    parser.add_argument('--config-id',default=defaults.CONFIG_ID,help='run configuration to use from --config')
    parser.add_argument('--verbosity',choices=['DEBUG','INFO','WARNING'],default=None,help='logging level')
    parser.add_argument('--slow',action='store_true',help='include the slow checks of verify-paper')
    parser.add_argument('-o','--output',default='',help='output path, defaults to STDOUT if not given')

    return parser

def build_parser():
    parser = argparse.ArgumentParser(prog='ratfert',formatter_class=argparse.ArgumentDefaultsHelpFormatter,description=__doc__)
    parser.add_argument('--version',action='version',version='%(prog)s ' + __version__)

    subparsers = parser.add_subparsers(dest='command',metavar='command')
    subparsers.required = True
    common = [common_arguments()]
    formatter = argparse.ArgumentDefaultsHelpFormatter

    sub = subparsers.add_parser('classify',parents=common,formatter_class=formatter,help='class of the numerator closure')
    word_argument(sub)
    sub.set_defaults(func=command_classify)

    sub = subparsers.add_parser('normalize',parents=common,formatter_class=formatter,help='rewrite a signed word until all entries agree in sign')
    word_argument(sub)
    sub.add_argument('--trace',action='store_true',help='print every rewrite')
    sub.set_defaults(func=command_normalize)

    sub = subparsers.add_parser('resultants',parents=common,formatter_class=formatter,help='resultant distribution of a shadow')
    word_argument(sub)
    sub.add_argument('--distinct',action='store_true',help='list distinct classes only')
    sub.add_argument('--denominator',action='store_true',help='use the denominator closure')
    sub.set_defaults(func=command_resultants)

    sub = subparsers.add_parser('fertility',parents=common,formatter_class=formatter,help='fertility number')
    word_argument(sub)
    sub.set_defaults(func=command_fertility)

    sub = subparsers.add_parser('frn',parents=common,formatter_class=formatter,help='rational fertility number')
    word_argument(sub)
    sub.set_defaults(func=command_frn)

    sub = subparsers.add_parser('trunk',parents=common,formatter_class=formatter,help='members of the trunk of a given length')
    sub.add_argument('length',type=int,help='word length n')
    sub.set_defaults(func=command_trunk)

    sub = subparsers.add_parser('g',parents=common,formatter_class=formatter,help='minimum fertility number over a trunk')
    sub.add_argument('length',type=int,help='word length n')
    sub.add_argument('--components',type=int,choices=[1,2],default=1,help='knots (1) or two-component links (2)')
    sub.set_defaults(func=command_g)

    sub = subparsers.add_parser('counts',parents=common,formatter_class=formatter,help='closed-form counts against enumeration')
    sub.add_argument('query',choices=sorted(COUNT_QUERIES),help='; '.join('{}: {}'.format(name,COUNT_QUERIES[name][1]) for name in sorted(COUNT_QUERIES)))
    sub.add_argument('values',type=int,nargs='+',help='integer arguments of the query')
    sub.set_defaults(func=command_counts)

    sub = subparsers.add_parser('table',parents=common,formatter_class=formatter,help='fertility numbers of the catalog')
    sub.add_argument('--components',type=int,choices=[1,2],default=None,help='restrict to knots (1) or links (2)')
    sub.set_defaults(func=command_table)

    sub = subparsers.add_parser('local',parents=common,formatter_class=formatter,help='local fertility of a trunk and its branches')
    sub.add_argument('components',type=int,choices=[1,2],help='knots (1) or two-component links (2)')
    sub.add_argument('length',type=int,help='trunk length n')
    sub.set_defaults(func=command_local)

    sub = subparsers.add_parser('verify-paper',parents=common,formatter_class=formatter,help='reproduce the fertility tables and counting theorems')
    sub.set_defaults(func=command_verify_paper)

    return parser

def configure(args):
    """Run configuration from --config and the flags given on the command line."""

    return RunConfiguration(configFile=args.config,configId=args.config_id,verbosity=args.verbosity,
                            max_crossing=args.max_crossing,
                            mirror_identified=False if args.mirror_distinct else None,
                            slow=True if args.slow else None,
                            catalog=args.catalog)

def run(argv=None,stdout=None,stderr=None):
    """Parse arguments, dispatch the subcommand and return the exit code."""

    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr

    try:
        args = build_parser().parse_args(argv)
    except SystemExit as error:
        return error.code if isinstance(error.code,int) else 2

    #Flags outside their configured ranges are usage errors
    try:
        configuration = configure(args)
    except (ValueError,KeyError) as error:
        stderr.write('ratfert {}: {}\n'.format(args.command,error))
        return 2

    try:
        get_logger(configuration['verbosity'])
        catalog = Catalog(source=configuration['catalog'],verbosity=configuration['verbosity'])
        result = args.func(args,configuration,catalog)
    except (ValueError,KeyError) as error:
        stderr.write('ratfert {}: {}\n'.format(args.command,error))
        return 1

    text,code = result if isinstance(result,tuple) else (result,0)

    if args.output:
        with open(args.output,'w') as output_file:
            output_file.write(text)
    else:
        stdout.write(text)

    return code

def main(argv=None):
    sys.exit(run(argv))

if __name__ == '__main__':
    main()
