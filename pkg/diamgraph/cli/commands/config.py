"""Configuration command implementations."""
from ...core import config
from ...utils.exceptions import InvalidInputError


def handle_set_command(args) -> None:
    """Handle `config set KEY=VALUE [KEY=VALUE ...]`.

    Args:
        args: Command line arguments containing pairs
    """
    updates = {}
    for pair in args.pairs:
        if '=' not in pair:
            raise InvalidInputError(f"Argument '{pair}' should be in the form KEY=VALUE")
        key, value = pair.split('=', 1)
        updates[key] = config.parse_config_value(key, value)

    global_config = config.load_global_config()
    for key, value in updates.items():
        if key not in config.constants.DEFAULT_CONFIG:
            print(f"Warning: Key '{key}' is not a standard global config key")
        global_config[key] = value
    config.save_global_config(global_config)
    print(f"Updated {len(updates)} global config keys.")

def print_config_command(args) -> None:
    """Print the current configuration.

    Args:
        args: Command line arguments (unused)
    """
    global_config = config.load_global_config()
    print(f"Global config ({config.constants.DIAMGRAPH_CONFIG_FILE}):")
    for key, value in sorted(global_config.items()):
        print(f"  {key}: {value}")
