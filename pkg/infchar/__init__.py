from infchar.segments import (
    CNumberMultiset,
    SegmentDesc,
    expand_segment,
    infchar_of,
    is_generalized_segment,
    is_segment,
)
