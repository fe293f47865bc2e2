from typing import *

JSONObject = Dict[str, Any]

# A report cell before formatting; None is rendered as "undefined".
Cell = Union[str, int, float, None]
Row = List[Cell]
