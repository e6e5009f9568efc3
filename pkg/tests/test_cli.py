"""
Tests for command-line interface.
"""

import json
import logging
from pathlib import Path

import pytest

from rook_orbits.cli import config_from_args, create_parser, main, setup_logging


class TestSetupLogging:
    """Tests for setup_logging function."""

    def test_default_logging(self):
        """Test default logging level."""
        # Clear existing handlers
        logging.root.handlers = []
        setup_logging()
        logger = logging.getLogger()
        assert logger.level == logging.INFO

    def test_verbose_logging(self):
        """Test verbose logging."""
        logging.root.handlers = []
        setup_logging(verbose=True)
        logger = logging.getLogger()
        assert logger.level == logging.DEBUG

    def test_quiet_logging(self):
        """Test quiet logging."""
        logging.root.handlers = []
        setup_logging(quiet=True)
        logger = logging.getLogger()
        assert logger.level == logging.ERROR


class TestCreateParser:
    """Tests for create_parser function."""

    def test_creates_parser(self):
        """Test that parser is created successfully."""
        parser = create_parser()
        assert parser is not None
        assert parser.prog == 'rook-orbits'

    def test_parser_defaults(self):
        """Test default argument values."""
        parser = create_parser()
        args = parser.parse_args(['g2', 'verify', '--all'])

        assert args.system is None
        assert args.seed == 7
        assert args.samples == 200
        assert args.output == 'text'
        assert args.data is None
        assert args.tables is None
        assert args.verbose is False
        assert args.quiet is False

    def test_parser_custom_arguments(self):
        """Test parsing custom arguments."""
        parser = create_parser()
        args = parser.parse_args([
            'f4', 'certify',
            '--placement', '1,2,3,2;1,2,2,0',
            '--seed', '3',
            '--output', 'json',
            '--data', 'tables.json',
            '--verbose'
        ])

        assert args.placement == '1,2,3,2;1,2,2,0'
        assert args.all is False
        assert args.seed == 3
        assert args.output == 'json'
        assert args.data == Path('tables.json')
        assert args.verbose is True

    def test_g2_verify_needs_a_target(self):
        """Test that g2 verify requires --case or --all."""
        parser = create_parser()
        with pytest.raises(SystemExit):
            parser.parse_args(['g2', 'verify'])

    def test_verbose_and_quiet_exclusive(self):
        """Test that --verbose and --quiet cannot be combined."""
        parser = create_parser()
        with pytest.raises(SystemExit):
            parser.parse_args(['roots', '-v', '-q'])


class TestConfigFromArgs:
    """Tests for config_from_args."""

    @pytest.mark.parametrize("argv,system", [
        (['roots'], 'F4'),
        (['andre', 'partition'], 'A3'),
        (['g2', 'dims'], 'G2'),
        (['f4', 'maximal'], 'F4'),
        (['rooks', '--system', 'A4'], 'A4'),
    ])
    def test_default_system(self, argv, system):
        """Test the per-command default root system."""
        config = config_from_args(create_parser().parse_args(argv))
        assert config.system == system

    def test_options_hold_command_arguments(self):
        """Test that command-specific arguments land in options."""
        config = config_from_args(create_parser().parse_args(['g2', 'verify', '--case', '9']))
        assert config.command == 'g2'
        assert config.action == 'verify'
        assert config.options['case'] == 9
        assert 'seed' not in config.options


class TestMain:
    """Tests for main function."""

    def test_roots(self, capsys):
        """Test listing the G2 roots."""
        assert main(['roots', '--system', 'G2', '--quiet']) == 0
        out = capsys.readouterr().out
        assert '3,2' in out
        assert '# 1 checks: 1 PASS, 0 FLAG, 0 FAIL, 0 SKIP' in out

    def test_rooks_json(self, capsys):
        """Test the A3 placement listing as JSON."""
        assert main(['rooks', '--system', 'A3', '--output', 'json', '--quiet']) == 0
        document = json.loads(capsys.readouterr().out)
        assert len(document['data']['listing']) == 15
        assert document['summary']['PASS'] == 1

    def test_g2_classify(self, capsys):
        """Test classifying e*_a + e*_top into case 12."""
        form = '{"coeffs": {"3,2": "1", "1,0": "1"}}'
        assert main(['g2', 'classify', '--form', form, '--output', 'json', '--quiet']) == 0
        document = json.loads(capsys.readouterr().out)
        assert document['data']['case'] == 12
        assert document['data']['xi'] == {'1,0': '1/1', '3,2': '1/1'}

    def test_andre_decompose(self, capsys):
        """Test decomposing a one-entry A2 matrix."""
        form = '[["0", "0", "0"], ["0", "0", "0"], ["2", "0", "0"]]'
        assert main(['andre', 'decompose', '--system', 'A2', '--form', form,
                     '--output', 'json', '--quiet']) == 0
        document = json.loads(capsys.readouterr().out)
        assert document['data']['D'] == [[1, 3]]
        assert document['data']['xi'] == ['2/1']

    def test_andre_membership(self, capsys):
        """Test a form inside O_{D,xi}."""
        form = '[["0", "0", "0"], ["0", "0", "0"], ["2", "0", "0"]]'
        assert main(['andre', 'membership', '--system', 'A2', '--placement', '1,1',
                     '--xi', '2', '--form', form, '--output', 'json', '--quiet']) == 0
        assert json.loads(capsys.readouterr().out)['data']['member'] is True

    def test_f4_certify_singular_placement(self, capsys):
        """Test that a singular placement is reported as SKIP."""
        assert main(['f4', 'certify', '--placement', '0,1,1,0;0,0,1,0',
                     '--output', 'json', '--quiet']) == 0
        document = json.loads(capsys.readouterr().out)
        assert document['checks'][0]['status'] == 'SKIP'

    def test_f4_table_row(self, capsys):
        """Test that a FLAGged row still exits with 0."""
        assert main(['f4', 'table', '--row', '17', '--quiet']) == 0
        assert 'row 17' in capsys.readouterr().out

    def test_bad_system_exit_code(self):
        """Test that bad input exits with code 2."""
        assert main(['roots', '--system', 'B3', '--quiet']) == 2

    def test_andre_rejects_other_families(self):
        """Test that andre commands need a type A system."""
        assert main(['andre', 'decompose', '--system', 'G2', '--form', '[]', '--quiet']) == 2

    def test_missing_data_file_exit_code(self, tmp_path):
        """Test that a missing data file exits with code 1."""
        missing = tmp_path / 'missing.json'
        assert main(['f4', 'maximal', '--data', str(missing), '--quiet']) == 1

    def test_selftest(self, capsys):
        """Test the fast invariant suite on a fresh install."""
        assert main(['selftest', '--output', 'json', '--quiet']) == 0
        document = json.loads(capsys.readouterr().out)
        assert document['summary']['FAIL'] == 0
        assert document['checks'][0]['name'] == 'G2 Jacobi identity'

    def test_selftest_corrupted_data(self, tmp_path):
        """Test that a corrupted data file is a hard failure."""
        broken = tmp_path / 'broken.json'
        broken.write_text('{"schema": 1', encoding='utf-8')
        assert main(['selftest', '--data', str(broken), '--quiet']) == 1

    def test_report_file(self, tmp_path, capsys):
        """Test writing the report to a file instead of stdout."""
        report_file = tmp_path / 'roots.json'
        assert main(['roots', '--system', 'A2', '--output', 'json',
                     '--report-file', str(report_file), '--quiet']) == 0
        assert capsys.readouterr().out == ''
        document = json.loads(report_file.read_text(encoding='utf-8'))
        assert document['schema'] == 1
        assert document['data']['listing'] == ['1,0', '0,1', '1,1']
