# Unit tests package


