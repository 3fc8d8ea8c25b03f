from AssemblyEngine.Trace import first_divergence

import TestUtilities

if __name__ == '__main__':
    TEST_DIR = TestUtilities.get_test_dir(__file__)

    golden = TestUtilities.read_text(TEST_DIR / 'golden.trace')
    trace = TestUtilities.read_text(TEST_DIR / 'out' / 'run.trace')
    assert first_divergence(golden, trace) is None, first_divergence(golden, trace)

    assert TestUtilities.read_text(TEST_DIR / 'out' / 'run.pat') == TestUtilities.read_text(TEST_DIR / 'golden.pat')
    with open(TEST_DIR / 'out' / 'run.ppm', 'rb') as f:
        assert f.read().startswith(b"P3\n3 3\n255\n255 255 255 ")
