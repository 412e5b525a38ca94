#
#
# Copyright (C) 2025 the ilsquares developers
#
# This program is free software; you can redistribute it and/or
# modify it under the terms of version 2 of the GNU General
# Public License as published by the Free Software Foundation.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program; if not, write to the Free Software
# Foundation, Inc., 51 Franklin Street, Fifth Floor,
# Boston, MA  02110-1301, USA.
#
#

__all__ = ['file_from_ils_dir', 'default_for_ils_dir', 'read_config',
           'config_value', 'config_option', 'node_budget', 'parse_parts',
           ]

import configparser as cp
import os
from pathlib import Path
from shutil import copy2

ils_dir = Path("~/.ilsquaresrc/").expanduser()
CONFIG_FILE = "ilsquares.cfg"
BUDGET_ENV = "ILS_NODE_BUDGET"


def default_for_ils_dir(file: str,
                        ):
    return Path(__file__).parent.joinpath("..", "defaults", file)


def file_from_ils_dir(file: str,
                      start_with_default: bool = True):
    full_file = ils_dir.joinpath(file)
    default_file = default_for_ils_dir(file)
    if start_with_default and not full_file.exists() and default_file.exists():
        try:
            ils_dir.mkdir(exist_ok=True)
            copy2(default_file, full_file)
        except OSError:
            return default_file
    return full_file


def read_config(file: str = CONFIG_FILE,
                user: bool = True,
                ) -> cp.ConfigParser:
    """
    Read the packaged defaults, then overlay the user copy when present.

    Parameters
    ----------
    file : str
        Name of the configuration file inside the defaults directory
    user : bool, optional
        If False, only the packaged defaults are read

    Returns
    -------
    configparser.ConfigParser
    """
    config = cp.ConfigParser()
    config.read(default_for_ils_dir(file))
    if user:
        user_file = file_from_ils_dir(file, start_with_default=False)
        if user_file.exists():
            config.read(user_file)
    return config


def config_value(section: str, key: str, fallback: int,
                 config: cp.ConfigParser = None,
                 ) -> int:
    if config is None:
        config = read_config()
    return config.getint(section, key, fallback=fallback)


def config_option(section: str, key: str, fallback: str,
                  config: cp.ConfigParser = None,
                  ) -> str:
    if config is None:
        config = read_config()
    return config.get(section, key, fallback=fallback).strip()


def node_budget(section: str = 'solver',
                budget: int = None,
                config: cp.ConfigParser = None,
                ) -> int:
    """
    Node budget for a search, resolved as: argument, environment, config file.

    Parameters
    ----------
    section : str
        'solver' or 'oracle'
    budget : int, optional
        Explicit budget, wins over everything else
    config : configparser.ConfigParser, optional

    Returns
    -------
    int
    """
    if budget is not None:
        return int(budget)
    env = os.environ.get(BUDGET_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"{BUDGET_ENV} must be an integer, got '{env}'")
    return config_value(section, 'node_budget', 200000, config=config)


def parse_parts(text: str) -> tuple:
    """
    Parse a comma separated list of part sizes ('3,2,1')

    Returns
    -------
    tuple of int
    """
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(field) for field in text.split(','))
    except ValueError:
        raise ValueError(f"parts must be comma separated integers, got '{text}'")
