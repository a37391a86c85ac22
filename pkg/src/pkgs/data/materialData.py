from typing import Any

import yaml as yaml

from .enumerators import DataKeys

STRESS_UNITS = {'Pa': 1.0, 'kPa': 1e3, 'MPa': 1e6, 'GPa': 1e9}


class MaterialData:
    """
    Material preset library.

    Presets are read from a YAML file with a top-level ``materials`` list;
    each entry names an energy family, its parameters in the stress unit
    given under ``units.stress`` and the toughness G_c in N/m.
    """
    def __init__(self, dataSrc: str) -> None:
        """
        Load the presets.

        :param dataSrc: Path to the YAML preset file.
        :type dataSrc: str

        :raises FileNotFoundError: If the file does not exist.
        :raises yaml.YAMLError: If the file cannot be parsed.
        :raises KeyError: If the ``materials`` key is missing.
        """
        with open(dataSrc, 'r', encoding='utf-8') as file:
            self.materials = yaml.safe_load(file)[DataKeys.MATERIALS]

    def getNames(self) -> list[str]:
        """
        Get the preset names in file order.

        :return: Preset names.
        :rtype: list[str]
        """
        return [material[DataKeys.NAME] for material in self.materials]

    def getPreset(self, name: str) -> dict[str, Any]:
        """
        Get a preset by name.

        :param name: Preset name.
        :type name: str

        :return: Copy of the preset entry.
        :rtype: dict[str, Any]

        :raises ValueError: If no preset has this name.
        """
        for material in self.materials:
            if material[DataKeys.NAME] == name:
                return dict(material)
        raise ValueError(f"Material preset {name} not found.")

    def getStressScale(self, name: str) -> float:
        """
        Get the factor converting the preset's stress unit to pascal.

        :param name: Preset name.
        :type name: str

        :return: Pascal per unit.
        :rtype: float

        :raises ValueError: If the preset or its unit is unknown.
        """
        return stressUnitScale(self.getPreset(name))


def stressUnitScale(material: dict[str, Any]) -> float:
    """
    Pascal per stress unit of a material block; 1 when no unit is given.

    :raises ValueError: If the unit is not one of Pa, kPa, MPa, GPa.
    """
    unit = (material.get(DataKeys.UNITS) or {}).get(DataKeys.STRESS_UNIT)
    if unit is None:
        return 1.0
    if unit not in STRESS_UNITS:
        raise ValueError(f"Stress unit {unit} not supported.")
    return STRESS_UNITS[unit]
