EMPTY_SCENE = "Scene is empty"
EMPTY_GEOMETRY = "Geometry is empty"
ZERO_DIRECTION = "Direction must not be (0,0)"
INCONSISTENT_SLOPE = "Slope pair does not match the segment direction"
NOT_NORMALIZED = "Scene has coordinates below the picture origin"
LINT_FAILED = "Picture has lint errors"
MALFORMED_INPUT = "Malformed input"
UNSUPPORTED_FEATURE = "Unsupported feature"
UNSUPPORTED_FORMAT = "Unsupported input format"
DOMAIN_ERROR = "Argument outside the function domain"
SOURCE_TOO_LARGE = "Source is too large"
UNREADABLE_INPUT = "Unable to read input"

SLOPE_BOUND = "Slope component exceeds {bound} in absolute value"
COMMON_DIVISOR = "Slope components have common divisor {divisor}"
ZERO_SLOPE = "Slope (0,0) has no direction"
OUTSIDE_BOX = "Reference point ({x},{y}) lies outside the picture box {width}x{height}"
NON_INTEGER_ARG = "Argument {value} of \\{command} must be an integer"

MISSING_HEADER = "Missing or malformed \\begin{picture}(W,H) header"
MISSING_END = "Missing \\end{picture}"
UNKNOWN_COMMAND = "Unrecognized command"
LABEL_NESTING = "Label text nests braces deeper than one level"
UNTERMINATED_GROUP = "Unterminated brace group"

UNSUPPORTED_ELEMENT = "Unsupported SVG element <{tag}> skipped"
TRANSFORM_REJECTED = "Element <{tag}> carries a transform attribute and was skipped"
EMPTY_TEXT = "Text element without content skipped"
NOT_SVG = "Root element is not <svg>"
NO_CANVAS = "SVG root needs a viewBox or width/height"
EMPTY_PUT_BODY = "Empty \\put body"
NON_POSITIVE_DIAMETER = "Circle diameter must be positive"
