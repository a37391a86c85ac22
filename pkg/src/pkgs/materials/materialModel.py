from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Any, Callable, Mapping

from ..data.enumerators import DataKeys, EnergyFamily
from .hyperelasticEnergy import HyperelasticEnergy, requirePositive
from .mooneyRivlin import MooneyRivlin3D
from .neoHookean import NeoHookean2D
from .pqEnergy import PQEnergy2D, PQEnergy3D
from .userEnergy import UserSuppliedEnergy

PARAMETER_NAMES: dict[EnergyFamily, tuple[str, ...]] = {
    EnergyFamily.NEO_HOOKEAN_2D: ('mu', 'lambda'),
    EnergyFamily.MOONEY_RIVLIN_3D: ('mu1', 'mu2', 'lambda_bar'),
    EnergyFamily.PQ_ENERGY_2D: ('mu_bar', 'lambda_bar', 'p'),
    EnergyFamily.PQ_ENERGY_3D: ('mu1', 'mu2', 'lambda_bar', 'p', 'q'),
    EnergyFamily.USER_SUPPLIED: (),
}

# Exponents are dimensionless; every other parameter is a stress
EXPONENTS = ('p', 'q')


@dataclass(frozen=True, eq=False)
class MaterialModel:
    """
    Intact energy family, its parameters and the toughness G_c.

    The model is immutable; the energy object is built once on
    construction.

    :raises ValueError: If parameters are missing or unknown for the
                        family.
    :raises NonPositiveError: If a modulus or G_c is not positive.
    """
    family: EnergyFamily
    parameters: Mapping[str, float] = field(default_factory=dict)
    gc: float = 1.0
    userEnergy: Callable[[Any], float] | None = None
    userDim: int = 2
    userIsotropic: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, 'parameters',
                           MappingProxyType({k: float(v) for k, v
                                             in self.parameters.items()}))
        requirePositive(gc=self.gc)
        expected = PARAMETER_NAMES[self.family]
        for name in expected:
            if name not in self.parameters:
                raise ValueError(f"Missing parameter '{name}' for "
                                 f"{self.family.value}.")
        for name in self.parameters:
            if name not in expected:
                raise ValueError(f"Unknown parameter '{name}' for "
                                 f"{self.family.value}.")
        object.__setattr__(self, '_energy', self._build())

    def _build(self) -> HyperelasticEnergy:
        values = self.parameters
        match self.family:
            case EnergyFamily.NEO_HOOKEAN_2D:
                return NeoHookean2D(values['mu'], values['lambda'])
            case EnergyFamily.MOONEY_RIVLIN_3D:
                return MooneyRivlin3D(values['mu1'], values['mu2'],
                                      values['lambda_bar'])
            case EnergyFamily.PQ_ENERGY_2D:
                return PQEnergy2D(values['mu_bar'], values['lambda_bar'],
                                  values['p'])
            case EnergyFamily.PQ_ENERGY_3D:
                return PQEnergy3D(values['mu1'], values['mu2'],
                                  values['lambda_bar'], values['p'],
                                  values['q'])
            case _:
                if self.userEnergy is None:
                    raise ValueError("UserSupplied family needs an energy "
                                     "callable.")
                return UserSuppliedEnergy(self.userEnergy, self.userDim,
                                          self.userIsotropic)

    @property
    def energy(self) -> HyperelasticEnergy:
        return self._energy                             # type: ignore

    @property
    def dim(self) -> int:
        return self.energy.dim

    def lameParameters(self) -> tuple[float, float]:
        """
        Lame parameters (mu, lambda) of the linearized model.

        :return: (mu, lambda).
        :rtype: tuple[float, float]
        """
        return self.energy.lameParameters()

    def scaled(self, stressScale: float, lengthScale: float = 1.0
               ) -> 'MaterialModel':
        """
        Nondimensional copy: stresses divided by stressScale, G_c by
        stressScale * lengthScale.

        :param stressScale: Stress unit, > 0.
        :type stressScale: float
        :param lengthScale: Length unit, > 0.
        :type lengthScale: float

        :return: Scaled model.
        :rtype: MaterialModel
        """
        requirePositive(stressScale=stressScale, lengthScale=lengthScale)
        parameters = {name: value if name in EXPONENTS
                      else value / stressScale
                      for name, value in self.parameters.items()}
        return MaterialModel(self.family, parameters,
                             self.gc / (stressScale * lengthScale),
                             self.userEnergy, self.userDim,
                             self.userIsotropic)

    @classmethod
    def fromDict(cls, data: Mapping[str, Any]) -> 'MaterialModel':
        """
        Build a model from a configuration mapping with keys ``family``,
        ``parameters`` and ``gc``.

        :param data: Configuration mapping.
        :type data: Mapping[str, Any]

        :return: Material model.
        :rtype: MaterialModel

        :raises ValueError: If the family is unknown or parameters are
                            invalid.
        :raises KeyError: If ``family`` is missing.
        """
        try:
            family = EnergyFamily(data[DataKeys.FAMILY])
        except ValueError:
            raise ValueError(f"Unknown energy family "
                             f"'{data[DataKeys.FAMILY]}'.") from None
        return cls(family, dict(data.get(DataKeys.PARAMETERS) or {}),
                   float(data.get(DataKeys.GC, 1.0)))
