# @Copyright: CEA-LIST/DIASI/SIALV/LVA (2023)
# @Author: CEA-LIST/DIASI/SIALV/LVA <pixano@cea.fr>
# @License: CECILL-C
#
# This software is a collaborative computer program whose purpose is to
# detect and characterize transient changes in sequential data streams.
# This software is governed by the CeCILL-C license under French law and
# abiding by the rules of distribution of free software. You can use,
# modify and/ or redistribute the software under the terms of the CeCILL-C
# license as circulated by CEA, CNRS and INRIA at the following URL
#
# http://www.cecill.info

from enum import Enum
from typing import Any, Type

import numpy as np
from pydantic import BaseModel


class ChangewatchType(BaseModel):
    """Base class for all changewatch custom types"""

    def to_dict(self) -> dict[str, Any]:
        """Return custom type as dict of plain Python values

        Returns:
            dict[str, Any]: Custom type as dict
        """

        def _convert_value_as_dict(value):
            """Recursively convert value to plain Python if possible"""

            if isinstance(value, ChangewatchType):
                return value.to_dict()
            if isinstance(value, Enum):
                return value.value
            if isinstance(value, np.ndarray):
                return value.tolist()
            if isinstance(value, np.generic):
                return value.item()
            if isinstance(value, dict):
                return {k: _convert_value_as_dict(v) for k, v in value.items()}
            if isinstance(value, (list, tuple)):
                return [_convert_value_as_dict(item) for item in value]
            return value

        return {
            name: _convert_value_as_dict(getattr(self, name))
            for name in type(self).model_fields
        }

    @classmethod
    def from_dict(
        cls: Type["ChangewatchType"], data: dict[str, Any]
    ) -> "ChangewatchType":
        """Instance custom type from dict

        Args:
            cls (Type[ChangewatchType]): Custom type to instance
            data (dict[str, Any]): Data to instance from

        Returns:
            ChangewatchType: New instance of custom type
        """

        return cls(**data)
