from ._sufmsel import *  # noqa: F401,F403
from ._sufmsel import TextError, Text, schema_version
