# Minuscule Homomesy Engine - Tests
