from pathlib import Path
from tabulate import tabulate

from ProgressManager.Misc.DictConversion import class_to_dict
from ConfigValidator.Config.WorkbenchConfig import WorkbenchConfig
from ConfigValidator.CustomErrors.ConfigErrors import (ConfigInvalidError, ConfigAttributeInvalidError)

class ConfigValidator:
    config_values_or_exception_dict: dict = {}
    error_found:                     bool = False

    @staticmethod
    def __check_expression(name, value, expected, expression):
        if expression(value, expected):
            ConfigValidator \
                .config_values_or_exception_dict[name] = str(ConfigValidator.config_values_or_exception_dict[name]) + \
                                                    f"\n\n{ConfigAttributeInvalidError(name, value, expected)}"
            ConfigValidator.error_found = True

    @staticmethod
    def __is_positive_int(value) -> bool:
        return isinstance(value, int) and not isinstance(value, bool) and value > 0

    @staticmethod
    def validate_config(config: WorkbenchConfig):
        ConfigValidator.error_found = False

        # Convert class to dictionary with utility method
        ConfigValidator.config_values_or_exception_dict = class_to_dict(config)

        for name in ('max_steps_hard_cap', 'default_max_steps', 'universe_hard_cap', 'default_trials',
                     'exhaustive_max_area', 'exhaustive_max_types', 'exhaustive_max_assemblies'):
            ConfigValidator.__check_expression(name, getattr(config, name), "positive int",
                                    (lambda a, b: not ConfigValidator.__is_positive_int(a))
                                )

        ConfigValidator.__check_expression('default_rng_seed', config.default_rng_seed, int,
                                (lambda a, b: not isinstance(a, b))
                            )

        ConfigValidator.__check_expression('worker_count', config.worker_count, "int >= 0",
                                (lambda a, b: not (isinstance(a, int) and a >= 0))
                            )

        ConfigValidator.__check_expression('certify_blueprints', config.certify_blueprints, bool,
                                (lambda a, b: not isinstance(a, b))
                            )

        ConfigValidator.__check_expression('budget_constants', config.budget_constants, "name -> (int, int)",
                                (lambda a, b: not (isinstance(a, dict) and all(
                                    isinstance(v, tuple) and len(v) == 2 and all(isinstance(c, int) for c in v)
                                    for v in a.values())))
                            )

        # Results output path
        ConfigValidator.__check_expression("results_output_path", 
                            config.results_output_path,
                            Path,
                            (lambda a, b: not isinstance(a, b))
                        )

        if ConfigValidator.error_found:
            # Display config in user-friendly manner, including the errors found
            print(
                tabulate(
                    ConfigValidator.config_values_or_exception_dict.items(),
                    ['Key', 'Value'],
                    tablefmt="rst"
                )
            )
            raise ConfigInvalidError
