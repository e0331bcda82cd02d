#!/usr/bin/env python
# -*- coding: utf-8 -*-
from varbell.cli import main


main()
