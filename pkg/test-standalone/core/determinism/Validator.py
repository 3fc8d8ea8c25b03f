from AssemblyEngine.Trace import first_divergence, parse_trace

import TestUtilities

SYSTEMS = ["single-pixel_16_5_9", "stripes_16_3_5", "multi-pixel_16_2,2_10,2_2,12"]

if __name__ == '__main__':
    TEST_DIR = TestUtilities.get_test_dir(__file__)
    out = TEST_DIR / 'out'

    for name in SYSTEMS:
        first = TestUtilities.read_text(out / f'{name}.1.trace')
        second = TestUtilities.read_text(out / f'{name}.2.trace')
        assert first_divergence(first, second) is None, name
        assert [n for n, _, _ in parse_trace(first)] == list(range(1, len(parse_trace(first)) + 1))

        assert TestUtilities.read_text(out / f'{name}.pat') == TestUtilities.read_text(out / f'{name}.target.pat'), name
        assert TestUtilities.read_text(out / f'{name}.verify').startswith("VERIFY pass trials=4"), name

        stats = TestUtilities.read_text(out / f'{name}.stats').splitlines()
        tiles = int(stats[0].split()[1])
        budget = next(line for line in stats if line.startswith("BUDGET"))
        cap, actual = map(int, budget.split()[2:4])
        assert actual == tiles and actual <= cap, name
        assert "BUDGET" not in TestUtilities.read_text(out / f'{name}.tamset'), name
        assert TestUtilities.read_text(out / f'{name}.verify').splitlines()[1] == budget, name
