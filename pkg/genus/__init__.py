# Strong symmetric genus search, D_n lifting and quotient bounds
