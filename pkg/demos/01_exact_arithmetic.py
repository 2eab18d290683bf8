"""Exact cyclotomic arithmetic: the scalar substrate.

Every weight, matrix entry and game value in coxkit is an exact element
of some Q(zeta_N). This walkthrough shows the basic moves: constructing
values, exact equality across conductors, inversion, root-of-unity
orders, and certified sign determination of real values.
"""
from fractions import Fraction

from coxkit import CyclotomicNumber, order_of, rational, sign_of_real, two_cos, zeta

i = zeta(4)
print("zeta(4) squared:", i * i)                      # -1, exactly

x = CyclotomicNumber.make(3, [1, 1])                  # 1 + zeta(3)
print("1 + zeta(3)  ==  -zeta(3)^2:", x == -(zeta(3) ** 2))
print("its inverse:", x.inverse())                    # -zeta(3)
print("check:", x * x.inverse())

root2 = two_cos(4)                                    # 2cos(pi/4) = sqrt(2)
print("\n2cos(pi/4) =", root2)
print("(2cos(pi/4))^2 =", root2 ** 2)                 # exactly 2
print("sqrt(2) + sqrt(2) squared:", (root2 + root2) ** 2)

print("\norders of roots of unity:")
for value in (rational(-1), zeta(6), zeta(12) ** 5, rational(2), 1 + zeta(5)):
    print(f"  order({value}) = {order_of(value)}")

# sign determination is exact: zero is decided symbolically, anything else
# by interval refinement that always terminates
golden = two_cos(5)
print("\ngolden ratio 2cos(pi/5) =", golden)
print("sign(x^2 - x - 1) at the golden ratio:", sign_of_real(golden ** 2 - golden - 1))
print("sign(2cos(pi/5) - 1.618033):",
      sign_of_real(golden - Fraction(1618033, 10 ** 6)))

# values live at the smallest conductor that can hold them
y = zeta(12) ** 4
print("\nzeta(12)^4 reduces to conductor", y.canonical().conductor, "=", y)
