import pytest

from gtesunion.decide import decide_union
from gtesunion.families import FAMILIES, of_size
from gtesunion.gtes import gtes_size, union


@pytest.mark.parametrize("tag", sorted(FAMILIES))
def test_family_case_and_size(tag):
    for n in (50, 300):
        p = of_size(FAMILIES[tag], n)
        assert gtes_size(union(p.E, p.F)) >= n
        v = decide_union(p.sig, p.E, p.F)
        assert v.case.tag == tag
