import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'isolatta.settings')
django.setup()
