"""Suite-wide switches.

Every fixed-2-set solver re-checks each function it yields against the
minimality predicate while tests run, so any completeness test that passes
also certifies soundness of the yielded stream.
"""

import romanenum.fixed_two as fixed_two

fixed_two.VERIFY_YIELDS = True
