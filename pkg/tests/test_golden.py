import pytest
import transcription

from crystalagt.cli import RunConfig, cmd_table


@pytest.mark.parametrize("kind", sorted(transcription.TRANSCRIBED))
def test_golden_file_matches_transcription(kind):
    assert transcription.golden_path(kind).read_text() == transcription.render_goldens(kind)


@pytest.mark.parametrize("kind", sorted(transcription.TRANSCRIBED))
def test_cli_output_matches_golden(kind):
    assert cmd_table(kind, RunConfig([1, 2])) == transcription.golden_path(kind).read_text()


@pytest.mark.parametrize("kind", sorted(transcription.TRANSCRIBED))
def test_entries_agree_exactly(kind):
    from crystalagt.cli import build_table

    for printed in transcription.transcribed_tables(kind):
        computed = build_table(kind, printed.level)
        assert computed.rows == printed.rows and computed.cols == printed.cols
        assert computed.entries == printed.entries
