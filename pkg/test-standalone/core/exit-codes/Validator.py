import TestUtilities

EXPECTED = {
    "pass":     0,
    "mismatch": 1,
    "usage":    2,
    "unknown":  2,
    "universe": 2,
    "missing":  3,
    "range":    3,
}

if __name__ == '__main__':
    TEST_DIR = TestUtilities.get_test_dir(__file__)
    codes = TestUtilities.read_exit_codes(TEST_DIR)
    assert codes == EXPECTED, codes
