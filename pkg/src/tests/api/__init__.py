# API tests package

