import sys
import traceback
import multiprocessing

from ConfigValidator.CustomErrors.BaseError import BaseError
from ConfigValidator.CLIRegister.CLIRegister import CLIRegister
from ConfigValidator.CustomErrors.CLIErrors import CommandNotRecognisedError, UsageError
from ConfigValidator.CustomErrors.ConfigErrors import UniverseSpecInvalidError
from ConfigValidator.CustomErrors.VerifyErrors import VerifyBaseError

EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_INPUT = 3


def exit_code_of(error: BaseError) -> int:
    if isinstance(error, VerifyBaseError):
        return EXIT_VERIFY_FAILED
    if isinstance(error, (CommandNotRecognisedError, UsageError, UniverseSpecInvalidError)):
        return EXIT_USAGE
    return EXIT_INPUT


def main(argv) -> int:
    try:
        CLIRegister.parse_command(argv)
        return 0
    except BaseError as e:                                                  # All custom errors are displayed in custom format
        print(f"\n{e}", file=sys.stderr)
        return exit_code_of(e)
    except:                                                                 # All non-covered errors are displayed normally
        traceback.print_exc()
        return 1


if __name__ == "__main__":
    multiprocessing.set_start_method('fork')                                # Workers share the parsed system with the parent
    sys.exit(main(sys.argv))
